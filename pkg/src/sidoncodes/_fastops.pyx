# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row-reduction kernels over GF(q), table driven.

Same API as _pyops: rref / rank / prepare / stack_ranks.  Matrices are
uint8 arrays of F_q digit encodings; add/mul/neg/inv tables come from
GFTables.  The batch kernel releases the GIL.
"""

import numpy as np

NAME = "c"


cdef int _forward_rank(unsigned char[:, ::1] m, int nrows, int ncols,
                       const unsigned char[:, ::1] addt,
                       const unsigned char[:, ::1] mult,
                       const unsigned char[::1] negt,
                       const unsigned char[::1] invt) nogil:
    cdef int rank = 0
    cdef int col, i, j, piv
    cdef unsigned char v, iv, nf
    for col in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if m[i, col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(col, ncols):
                v = m[piv, j]
                m[piv, j] = m[rank, j]
                m[rank, j] = v
        iv = invt[m[rank, col]]
        if iv != 1:
            for j in range(col, ncols):
                m[rank, j] = mult[iv, m[rank, j]]
        for i in range(rank + 1, nrows):
            v = m[i, col]
            if v:
                nf = negt[v]
                for j in range(col, ncols):
                    m[i, j] = addt[m[i, j], mult[nf, m[rank, j]]]
        rank += 1
        if rank == nrows:
            break
    return rank


cdef void _back_eliminate(unsigned char[:, ::1] m, int rank, int ncols,
                          const unsigned char[:, ::1] addt,
                          const unsigned char[:, ::1] mult,
                          const unsigned char[::1] negt) nogil:
    cdef int i, ii, j, c
    cdef unsigned char v, nf
    for i in range(rank - 1, -1, -1):
        c = -1
        for j in range(ncols):
            if m[i, j]:
                c = j
                break
        if c < 0:
            continue
        for ii in range(i):
            v = m[ii, c]
            if v:
                nf = negt[v]
                for j in range(c, ncols):
                    m[ii, j] = addt[m[ii, j], mult[nf, m[i, j]]]


def rref(rows, int ncols, gf):
    """Canonical reduced-row-echelon rows (zero rows dropped) and rank."""
    mat = np.array([list(r) for r in rows], dtype=np.uint8)
    if mat.size == 0:
        return (), 0
    mat = np.ascontiguousarray(mat.reshape(len(mat), ncols))
    cdef unsigned char[:, ::1] mv = mat
    cdef int rank
    rank = _forward_rank(mv, mat.shape[0], ncols, gf.add, gf.mul, gf.neg, gf.inv)
    _back_eliminate(mv, rank, ncols, gf.add, gf.mul, gf.neg)
    return tuple(tuple(int(x) for x in mat[i]) for i in range(rank)), rank


def rank(rows, int ncols, gf):
    mat = np.array([list(r) for r in rows], dtype=np.uint8)
    if mat.size == 0:
        return 0
    mat = np.ascontiguousarray(mat.reshape(len(mat), ncols))
    cdef unsigned char[:, ::1] mv = mat
    return _forward_rank(mv, mat.shape[0], ncols, gf.add, gf.mul, gf.neg, gf.inv)


def prepare(mats, int ncols, gf):
    mats = list(mats)
    if not mats:
        return np.zeros((0, 0, ncols), dtype=np.uint8)
    arr = np.array([[list(r) for r in mat] for mat in mats], dtype=np.uint8)
    return np.ascontiguousarray(arr)


def stack_ranks(top_rows, prepared, int ncols, gf):
    cdef const unsigned char[:, :, ::1] bottoms = prepared
    cdef int nmats = bottoms.shape[0]
    cdef int d2 = bottoms.shape[1]
    top = np.array([list(r) for r in top_rows], dtype=np.uint8)
    cdef int d1 = top.shape[0]
    top = np.ascontiguousarray(top.reshape(d1, ncols))
    cdef const unsigned char[:, ::1] topv = top
    scratch_arr = np.empty((d1 + d2, ncols), dtype=np.uint8)
    cdef unsigned char[:, ::1] scratch = scratch_arr
    out_arr = np.empty(nmats, dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef const unsigned char[:, ::1] addt = gf.add
    cdef const unsigned char[:, ::1] mult = gf.mul
    cdef const unsigned char[::1] negt = gf.neg
    cdef const unsigned char[::1] invt = gf.inv
    cdef int t, i, j
    with nogil:
        for t in range(nmats):
            for i in range(d1):
                for j in range(ncols):
                    scratch[i, j] = topv[i, j]
            for i in range(d2):
                for j in range(ncols):
                    scratch[d1 + i, j] = bottoms[t, i, j]
            out[t] = _forward_rank(scratch, d1 + d2, ncols, addt, mult, negt, invt)
    return out_arr.tolist()
