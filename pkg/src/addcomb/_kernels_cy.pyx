# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled int64 kernels; algorithm-for-algorithm twins of _kernels_py.

Callers must pre-check magnitudes (see _kernels.INT64_SAFE): with inputs
bounded by 2**28, differences fit 2**29, products of two differences fit
2**58, and line constants a*px + b*py fit 2**58, all inside int64.
"""

from libc.stdlib cimport free, malloc, qsort


cdef long long _gcd_ll(long long a, long long b) noexcept nogil:
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef long long *_to_array(seq, Py_ssize_t *n_out) except NULL:
    cdef Py_ssize_t n = len(seq)
    cdef long long *buf = <long long *> malloc((n if n > 0 else 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]
    n_out[0] = n
    return buf


cdef int _cmp_ll(const void *pa, const void *pb) noexcept nogil:
    cdef long long x = (<const long long *> pa)[0]
    cdef long long y = (<const long long *> pb)[0]
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


cdef int _cmp_line(const void *pa, const void *pb) noexcept nogil:
    # lexicographic on (a, b, c) records laid out as 3 consecutive int64
    cdef const long long *x = <const long long *> pa
    cdef const long long *y = <const long long *> pb
    cdef int i
    for i in range(3):
        if x[i] < y[i]:
            return -1
        if x[i] > y[i]:
            return 1
    return 0


cdef bint _bfind(const long long *vals, Py_ssize_t n, long long x) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if vals[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo < n and vals[lo] == x


cdef long long _count_on_line_c(long long a, long long b, long long c,
                                const long long *vals, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t i
    cdef long long num, cnt = 0
    if b == 0:
        # vertical line x = c/a; a != 0 for any spanned line
        if c % a == 0 and _bfind(vals, n, c / a):
            return n
        return 0
    for i in range(n):
        num = c - a * vals[i]
        if num % b == 0 and _bfind(vals, n, num / b):
            cnt += 1
    return cnt


def collinear_six_counts(a, b, c):
    """(total, distinct) collinear 6-tuple counts; see _kernels_py twin."""
    cdef Py_ssize_t na = 0, nb = 0, nc = 0
    cdef long long *av = _to_array(a, &na)
    cdef long long *bv = NULL
    cdef long long *cv = NULL
    cdef long long total = 0, distinct = 0
    cdef Py_ssize_t i1, i2, j1, j2, k1, k2
    cdef long long a1, a2, b1, b2, c1, c2, db1, db2, dc1
    cdef bint u12
    try:
        bv = _to_array(b, &nb)
        cv = _to_array(c, &nc)
        with nogil:
            for i1 in range(na):
                a1 = av[i1]
                for i2 in range(na):
                    a2 = av[i2]
                    for j1 in range(nb):
                        b1 = bv[j1]
                        db1 = b1 - a1
                        for j2 in range(nb):
                            b2 = bv[j2]
                            db2 = b2 - a2
                            u12 = db1 != 0 or db2 != 0
                            for k1 in range(nc):
                                c1 = cv[k1]
                                dc1 = c1 - a1
                                for k2 in range(nc):
                                    c2 = cv[k2]
                                    if db1 * (c2 - a2) == dc1 * db2:
                                        total += 1
                                        if (u12
                                                and (dc1 != 0 or c2 != a2)
                                                and (b1 != c1 or b2 != c2)):
                                            distinct += 1
    finally:
        free(av)
        free(bv)
        free(cv)
    return int(total), int(distinct)


cdef Py_ssize_t _intersect_sorted(const long long *x, Py_ssize_t nx,
                                  const long long *y, Py_ssize_t ny,
                                  long long *out) noexcept nogil:
    cdef Py_ssize_t i = 0, j = 0, n = 0
    while i < nx and j < ny:
        if x[i] < y[j]:
            i += 1
        elif x[i] > y[j]:
            j += 1
        else:
            out[n] = x[i]
            n += 1
            i += 1
            j += 1
    return n


def t_o_linehash(g1, g2, g3):
    """Ordered pairwise-distinct collinear triple count; see _kernels_py twin."""
    cdef Py_ssize_t n1 = 0, n2 = 0, n3 = 0
    cdef long long *v1 = _to_array(g1, &n1)
    cdef long long *v2 = NULL
    cdef long long *v3 = NULL
    cdef long long *i12 = NULL
    cdef long long *i13 = NULL
    cdef long long *i23 = NULL
    cdef long long *i123 = NULL
    cdef long long *rec = NULL
    cdef Py_ssize_t m12 = 0, m13 = 0, m23 = 0, m123 = 0
    cdef Py_ssize_t p1, q1, p2, q2, nrec = 0, i
    cdef long long px, py, qx, qy, la, lb, lc, g
    cdef long long total = 0, cn1, cn2, cn3, c12, c13, c23, c123
    cdef bint equal_all
    cdef Py_ssize_t npairs
    try:
        v2 = _to_array(g2, &n2)
        v3 = _to_array(g3, &n3)
        qsort(v1, n1, sizeof(long long), _cmp_ll)
        qsort(v2, n2, sizeof(long long), _cmp_ll)
        qsort(v3, n3, sizeof(long long), _cmp_ll)

        equal_all = n1 == n2 and n2 == n3
        if equal_all:
            for i in range(n1):
                if v1[i] != v2[i] or v1[i] != v3[i]:
                    equal_all = False
                    break
        if not equal_all:
            i12 = <long long *> malloc((n1 if n1 > 0 else 1) * sizeof(long long))
            i13 = <long long *> malloc((n1 if n1 > 0 else 1) * sizeof(long long))
            i23 = <long long *> malloc((n2 if n2 > 0 else 1) * sizeof(long long))
            i123 = <long long *> malloc((n1 if n1 > 0 else 1) * sizeof(long long))
            if i12 == NULL or i13 == NULL or i23 == NULL or i123 == NULL:
                raise MemoryError()
            m12 = _intersect_sorted(v1, n1, v2, n2, i12)
            m13 = _intersect_sorted(v1, n1, v3, n3, i13)
            m23 = _intersect_sorted(v2, n2, v3, n3, i23)
            m123 = _intersect_sorted(i12, m12, v3, n3, i123)

        npairs = n1 * n1 * n2 * n2
        rec = <long long *> malloc((3 * npairs if npairs > 0 else 1) * sizeof(long long))
        if rec == NULL:
            raise MemoryError()

        with nogil:
            for p1 in range(n1):
                px = v1[p1]
                for q1 in range(n1):
                    py = v1[q1]
                    for p2 in range(n2):
                        qx = v2[p2]
                        for q2 in range(n2):
                            qy = v2[q2]
                            if px == qx and py == qy:
                                continue
                            la = qy - py
                            lb = px - qx
                            lc = la * px + lb * py
                            g = _gcd_ll(la, lb)
                            if la < 0 or (la == 0 and lb < 0):
                                g = -g
                            rec[3 * nrec] = la / g
                            rec[3 * nrec + 1] = lb / g
                            rec[3 * nrec + 2] = lc / g
                            nrec += 1
            qsort(rec, nrec, 3 * sizeof(long long), _cmp_line)
            i = 0
            while i < nrec:
                la = rec[3 * i]
                lb = rec[3 * i + 1]
                lc = rec[3 * i + 2]
                # skip duplicates of this line
                while i < nrec and rec[3 * i] == la and rec[3 * i + 1] == lb and rec[3 * i + 2] == lc:
                    i += 1
                cn1 = _count_on_line_c(la, lb, lc, v1, n1)
                if equal_all:
                    total += cn1 * (cn1 - 1) * (cn1 - 2)
                    continue
                cn2 = _count_on_line_c(la, lb, lc, v2, n2)
                cn3 = _count_on_line_c(la, lb, lc, v3, n3)
                if cn1 == 0 or cn2 == 0 or cn3 == 0:
                    continue
                c12 = _count_on_line_c(la, lb, lc, i12, m12)
                c13 = _count_on_line_c(la, lb, lc, i13, m13)
                c23 = _count_on_line_c(la, lb, lc, i23, m23)
                c123 = _count_on_line_c(la, lb, lc, i123, m123)
                total += cn1 * cn2 * cn3 - c12 * cn3 - c13 * cn2 - c23 * cn1 + 2 * c123
    finally:
        free(v1)
        free(v2)
        free(v3)
        free(i12)
        free(i13)
        free(i23)
        free(i123)
        free(rec)
    return int(total)


def count_incidences(pxs, pys, las, lbs, lcs):
    """Exact point-line incidence count; see _kernels_py twin."""
    cdef Py_ssize_t np = 0, nl = 0, dummy = 0
    cdef long long *xv = _to_array(pxs, &np)
    cdef long long *yv = NULL
    cdef long long *av = NULL
    cdef long long *bv = NULL
    cdef long long *cv = NULL
    cdef long long total = 0, a, b, c
    cdef Py_ssize_t i, j
    try:
        yv = _to_array(pys, &dummy)
        av = _to_array(las, &nl)
        bv = _to_array(lbs, &dummy)
        cv = _to_array(lcs, &dummy)
        with nogil:
            for j in range(nl):
                a = av[j]
                b = bv[j]
                c = cv[j]
                for i in range(np):
                    if a * xv[i] + b * yv[i] == c:
                        total += 1
    finally:
        free(xv)
        free(yv)
        free(av)
        free(bv)
        free(cv)
    return int(total)


cdef long long _DIR_OFF = 1 << 28
cdef long long _DIR_SPAN = (1 << 29) + 1


cdef Py_ssize_t _direction_keys(const long long *vals, Py_ssize_t n,
                                long long *keys, long long *zero_pairs) noexcept nogil:
    # encode the primitive direction of each ordered pair as a single int64;
    # components are <= 2**28 so (u+OFF)*SPAN + (v+OFF) < 2**59
    cdef Py_ssize_t i, j, nk = 0
    cdef long long u, v, g
    zero_pairs[0] = 0
    for i in range(n):
        u = vals[i]
        for j in range(n):
            v = vals[j]
            if u == 0 and v == 0:
                zero_pairs[0] += 1
                continue
            g = _gcd_ll(u, v)
            if u < 0 or (u == 0 and v < 0):
                g = -g
            keys[nk] = (u / g + _DIR_OFF) * _DIR_SPAN + (v / g + _DIR_OFF)
            nk += 1
    return nk


def mul_pairs_count(x, y):
    """#{(x1,x2,y1,y2): x1*y2 == x2*y1}; see _kernels_py twin."""
    cdef Py_ssize_t nx = 0, ny = 0
    cdef long long *xv = _to_array(x, &nx)
    cdef long long *yv = NULL
    cdef long long *kx = NULL
    cdef long long *ky = NULL
    cdef long long zx = 0, zy = 0, total = 0, key, runx, runy
    cdef Py_ssize_t nkx, nky, i, j, i2, j2
    try:
        yv = _to_array(y, &ny)
        kx = <long long *> malloc((nx * nx if nx > 0 else 1) * sizeof(long long))
        ky = <long long *> malloc((ny * ny if ny > 0 else 1) * sizeof(long long))
        if kx == NULL or ky == NULL:
            raise MemoryError()
        with nogil:
            nkx = _direction_keys(xv, nx, kx, &zx)
            nky = _direction_keys(yv, ny, ky, &zy)
            total = zx * (<long long> ny * ny) + zy * (<long long> nx * nx) - zx * zy
            qsort(kx, nkx, sizeof(long long), _cmp_ll)
            qsort(ky, nky, sizeof(long long), _cmp_ll)
            i = 0
            j = 0
            while i < nkx and j < nky:
                if kx[i] < ky[j]:
                    i += 1
                elif kx[i] > ky[j]:
                    j += 1
                else:
                    key = kx[i]
                    i2 = i
                    while i2 < nkx and kx[i2] == key:
                        i2 += 1
                    j2 = j
                    while j2 < nky and ky[j2] == key:
                        j2 += 1
                    total += <long long> (i2 - i) * (j2 - j)
                    i = i2
                    j = j2
    finally:
        free(xv)
        free(yv)
        free(kx)
        free(ky)
    return int(total)
