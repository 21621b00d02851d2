# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend; mirrors ``pure`` function for function.

All residues live in [0, p) with p < 2^31, so every product fits in a
signed 64-bit integer and one reduction per multiply-add keeps the
accumulator in range.
"""
from libc.stdlib cimport malloc, free

NAME = "compiled"

ctypedef long long i64


cdef inline i64 modpow(i64 base, i64 exp, i64 p):
    cdef i64 r = 1
    base %= p
    while exp > 0:
        if exp & 1:
            r = r * base % p
        base = base * base % p
        exp >>= 1
    return r


cdef i64* _to_buf(list a) except NULL:
    cdef Py_ssize_t n = len(a), i
    cdef i64* buf = <i64*>malloc((n if n else 1) * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = a[i]
    return buf


cdef list _to_list(i64* buf, Py_ssize_t n):
    cdef Py_ssize_t i
    out = [0] * n
    for i in range(n):
        out[i] = buf[i]
    return out


def poly_mul(list a, list b, p_in):
    """Schoolbook product; len(out) == len(a)+len(b)-1, untrimmed."""
    cdef i64 p = p_in
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    cdef i64 x
    cdef i64* pa = _to_buf(a)
    cdef i64* pb = _to_buf(b)
    cdef Py_ssize_t lo = la + lb - 1
    cdef i64* out = <i64*>malloc(lo * sizeof(i64))
    if out == NULL:
        free(pa); free(pb)
        raise MemoryError()
    for i in range(lo):
        out[i] = 0
    for i in range(la):
        x = pa[i]
        if x:
            for j in range(lb):
                out[i + j] = (out[i + j] + x * pb[j]) % p
    result = _to_list(out, lo)
    free(pa); free(pb); free(out)
    return result


def poly_divrem(list a, list b, p_in):
    """Quotient and remainder with deg r < deg b; b must have a nonzero lead."""
    cdef i64 p = p_in
    cdef Py_ssize_t la = len(a), db = len(b) - 1, i, j
    cdef i64* r = _to_buf(a)
    cdef i64* pb = _to_buf(b)
    cdef i64* q
    cdef Py_ssize_t lq, lr
    cdef i64 inv_lead, c
    while la and r[la - 1] == 0:
        la -= 1
    if la <= db:
        result = ([], _to_list(r, la))
        free(r); free(pb)
        return result
    lq = la - db
    q = <i64*>malloc(lq * sizeof(i64))
    if q == NULL:
        free(r); free(pb)
        raise MemoryError()
    inv_lead = modpow(pb[db], p - 2, p)
    for i in range(lq - 1, -1, -1):
        c = r[i + db] * inv_lead % p
        q[i] = c
        if c:
            for j in range(db + 1):
                r[i + j] = (r[i + j] - c * pb[j]) % p
                if r[i + j] < 0:
                    r[i + j] += p
    lr = db
    while lr and r[lr - 1] == 0:
        lr -= 1
    result = (_to_list(q, lq), _to_list(r, lr))
    free(r); free(pb); free(q)
    return result


def poly_gcd(list a, list b, p_in):
    """Monic gcd by in-place Euclid; inputs must not both be zero."""
    cdef i64 p = p_in
    cdef Py_ssize_t la = len(a), lb = len(b), i, j, d
    cdef i64* u = _to_buf(a)
    cdef i64* v = _to_buf(b)
    cdef i64* tmp
    cdef i64 inv_lead, c
    while la and u[la - 1] == 0:
        la -= 1
    while lb and v[lb - 1] == 0:
        lb -= 1
    if la < lb:
        tmp = u; u = v; v = tmp
        la, lb = lb, la
    while lb:
        # u <- u mod v (in place), then swap
        inv_lead = modpow(v[lb - 1], p - 2, p)
        for i in range(la - lb, -1, -1):
            c = u[i + lb - 1] * inv_lead % p
            if c:
                for j in range(lb):
                    u[i + j] = (u[i + j] - c * v[j]) % p
                    if u[i + j] < 0:
                        u[i + j] += p
        d = lb - 1
        while d and u[d - 1] == 0:
            d -= 1
        tmp = u; u = v; v = tmp
        la = lb
        lb = d
    inv_lead = modpow(u[la - 1], p - 2, p)
    for i in range(la):
        u[i] = u[i] * inv_lead % p
    result = _to_list(u, la)
    free(u); free(v)
    return result


def series_mul(list a, list b, n_in, p_in):
    """Product truncated at order n; returns exactly n coefficients."""
    cdef i64 p = p_in
    cdef Py_ssize_t n = n_in, la = len(a), lb = len(b), i, j, jmax
    cdef i64 x
    cdef i64* pa = _to_buf(a)
    cdef i64* pb = _to_buf(b)
    cdef i64* out = <i64*>malloc((n if n else 1) * sizeof(i64))
    if out == NULL:
        free(pa); free(pb)
        raise MemoryError()
    for i in range(n):
        out[i] = 0
    if la > n:
        la = n
    for i in range(la):
        x = pa[i]
        if x:
            jmax = n - i
            if jmax > lb:
                jmax = lb
            for j in range(jmax):
                out[i + j] = (out[i + j] + x * pb[j]) % p
    result = _to_list(out, n)
    free(pa); free(pb); free(out)
    return result


def series_inv(list a, n_in, p_in):
    """Series inverse to order n; a[0] must be nonzero."""
    cdef i64 p = p_in
    cdef Py_ssize_t n = n_in, la = len(a), i, k, kmax
    cdef i64* pa = _to_buf(a)
    cdef i64* out = <i64*>malloc((n if n else 1) * sizeof(i64))
    if out == NULL:
        free(pa)
        raise MemoryError()
    cdef i64 inv0 = modpow(pa[0], p - 2, p)
    cdef i64 s
    out[0] = inv0
    for i in range(1, n):
        s = 0
        kmax = i if i < la - 1 else la - 1
        for k in range(1, kmax + 1):
            s = (s + pa[k] * out[i - k]) % p
        out[i] = (p - s) % p * inv0 % p
    result = _to_list(out, n)
    free(pa); free(out)
    return result


def twist_sum(list cs, list num, list den, p_in):
    """Sum of cs[k] * num^k * den^(L-1-k), trimmed."""
    cdef i64 p = p_in
    cdef Py_ssize_t L = len(cs), dn = len(num) - 1, dd = len(den) - 1
    cdef Py_ssize_t maxdeg = dn if dn > dd else dd
    cdef Py_ssize_t cap = (L - 1) * maxdeg + 1 if L > 1 else 1
    cdef i64* pc = _to_buf(cs)
    cdef i64* pn = _to_buf(num)
    cdef i64* pd = _to_buf(den)
    cdef i64* acc = <i64*>malloc(cap * sizeof(i64))
    cdef i64* dpow = <i64*>malloc(cap * sizeof(i64))
    cdef i64* scratch = <i64*>malloc(cap * sizeof(i64))
    if acc == NULL or dpow == NULL or scratch == NULL:
        free(pc); free(pn); free(pd)
        if acc != NULL: free(acc)
        if dpow != NULL: free(dpow)
        if scratch != NULL: free(scratch)
        raise MemoryError()
    cdef Py_ssize_t lacc = 1, ldpow = 1, i, j, newlen
    cdef Py_ssize_t k
    cdef i64 x, c
    acc[0] = pc[L - 1] % p
    dpow[0] = 1
    for k in range(L - 2, -1, -1):
        # acc *= num
        newlen = lacc + dn
        for i in range(newlen):
            scratch[i] = 0
        for i in range(lacc):
            x = acc[i]
            if x:
                for j in range(dn + 1):
                    scratch[i + j] = (scratch[i + j] + x * pn[j]) % p
        for i in range(newlen):
            acc[i] = scratch[i]
        lacc = newlen
        # dpow *= den
        newlen = ldpow + dd
        for i in range(newlen):
            scratch[i] = 0
        for i in range(ldpow):
            x = dpow[i]
            if x:
                for j in range(dd + 1):
                    scratch[i + j] = (scratch[i + j] + x * pd[j]) % p
        for i in range(newlen):
            dpow[i] = scratch[i]
        ldpow = newlen
        # acc += cs[k] * dpow
        c = pc[k]
        if c:
            if ldpow > lacc:
                for i in range(lacc, ldpow):
                    acc[i] = 0
                lacc = ldpow
            for i in range(ldpow):
                if dpow[i]:
                    acc[i] = (acc[i] + c * dpow[i]) % p
    while lacc and acc[lacc - 1] == 0:
        lacc -= 1
    result = _to_list(acc, lacc)
    free(pc); free(pn); free(pd); free(acc); free(dpow); free(scratch)
    return result


# -- sequence truncations -----------------------------------------------------


cdef struct Tables:
    i64* fact
    i64* ifact


cdef Tables _make_tables(i64 p) except *:
    cdef Tables t
    t.fact = <i64*>malloc(p * sizeof(i64))
    t.ifact = <i64*>malloc(p * sizeof(i64))
    if t.fact == NULL or t.ifact == NULL:
        if t.fact != NULL: free(t.fact)
        if t.ifact != NULL: free(t.ifact)
        raise MemoryError()
    cdef i64 i
    t.fact[0] = 1
    for i in range(1, p):
        t.fact[i] = t.fact[i - 1] * i % p
    t.ifact[p - 1] = modpow(t.fact[p - 1], p - 2, p)
    for i in range(p - 1, 0, -1):
        t.ifact[i - 1] = t.ifact[i] * i % p
    return t


cdef inline void _free_tables(Tables t) noexcept:
    free(t.fact)
    free(t.ifact)


cdef inline i64 binom(i64 m, i64 k, i64 p, Tables t) noexcept:
    if k < 0 or m < 0 or k > m:
        return 0
    cdef i64 r = 1, mi, ki
    while k or m:
        mi = m % p
        ki = k % p
        if ki > mi:
            return 0
        r = r * t.fact[mi] % p * t.ifact[ki] % p * t.ifact[mi - ki] % p
        m //= p
        k //= p
    return r


def trunc_apery(count_in, p_in):
    cdef i64 p = p_in
    cdef i64 count = count_in
    cdef Tables t = _make_tables(p)
    cdef i64 n, k, s, b, u
    out = [0] * count
    for n in range(count):
        s = 0
        for k in range(n + 1):
            b = binom(n, k, p, t)
            u = binom(n + k, n, p, t)
            s = (s + b * b % p * (u * u % p)) % p
        out[n] = s
    _free_tables(t)
    return out


def trunc_domb(count_in, p_in):
    cdef i64 p = p_in
    cdef i64 count = count_in
    cdef Tables t = _make_tables(p)
    cdef i64 n, k, s, b
    out = [0] * count
    for n in range(count):
        s = 0
        for k in range(n + 1):
            b = binom(n, k, p, t)
            s = (s + binom(2 * k, k, p, t) * binom(2 * n - 2 * k, n - k, p, t) % p
                 * (b * b % p)) % p
        if n % 2 and s:
            s = p - s
        out[n] = s
    _free_tables(t)
    return out


def trunc_az(count_in, p_in):
    cdef i64 p = p_in
    cdef i64 count = count_in
    cdef Tables t = _make_tables(p)
    cdef i64* pow3 = <i64*>malloc((count if count else 1) * sizeof(i64))
    if pow3 == NULL:
        _free_tables(t)
        raise MemoryError()
    cdef i64 n, k, s, term, i
    pow3[0] = 1
    for i in range(1, count):
        pow3[i] = pow3[i - 1] * 3 % p
    out = [0] * count
    for n in range(count):
        s = 0
        for k in range(n // 3 + 1):
            term = (binom(3 * k, k, p, t) * binom(2 * k, k, p, t) % p
                    * pow3[n - 3 * k] % p * binom(n, 3 * k, p, t) % p
                    * binom(n + k, n, p, t) % p)
            if (n - k) % 2 and term:
                term = p - term
            s = (s + term) % p
        out[n] = s
    _free_tables(t)
    free(pow3)
    return out


def trunc_franel(count_in, p_in):
    cdef i64 p = p_in
    cdef i64 count = count_in
    cdef Tables t = _make_tables(p)
    cdef i64 n, k, s, b
    out = [0] * count
    for n in range(count):
        s = 0
        for k in range(n + 1):
            b = binom(n, k, p, t)
            s = (s + b * b % p * b) % p
        out[n] = s
    _free_tables(t)
    return out


def trunc_gen(count_in, p_in, r_in, s_in):
    cdef i64 p = p_in
    cdef i64 count = count_in
    cdef i64 r = r_in, sexp = s_in
    cdef Tables t = _make_tables(p)
    cdef i64 n, k, acc
    out = [0] * count
    for n in range(count):
        acc = 0
        for k in range(n + 1):
            acc = (acc + modpow(binom(n, k, p, t), r, p)
                   * modpow(binom(n + k, n, p, t), sexp, p)) % p
        out[n] = acc
    _free_tables(t)
    return out


def trunc_a229111(count_in, p_in):
    cdef i64 p = p_in
    cdef i64 count = count_in
    cdef Tables t = _make_tables(p)
    cdef i64 n, k, s, b, term
    out = [0] * count
    for n in range(count):
        s = 0
        for k in range(n // 5 + 1):
            b = binom(n, k, p, t)
            term = (b * b % p * b % p
                    * ((binom(4 * n - 5 * k - 1, 3 * n, p, t)
                        + binom(4 * n - 5 * k, 3 * n, p, t)) % p) % p)
            if (n - k) % 2 and term:
                term = p - term
            s = (s + term) % p
        out[n] = s
    _free_tables(t)
    return out


def trunc_a290575(count_in, p_in):
    cdef i64 p = p_in
    cdef i64 count = count_in
    cdef Tables t = _make_tables(p)
    cdef i64 n, k, s, b, u
    out = [0] * count
    for n in range(count):
        s = 0
        for k in range((n + 1) // 2, n + 1):
            b = binom(n, k, p, t)
            u = binom(2 * k, n, p, t)
            s = (s + b * b % p * (u * u % p)) % p
        out[n] = s
    _free_tables(t)
    return out


def trunc_a290576(count_in, p_in):
    cdef i64 p = p_in
    cdef i64 count = count_in
    cdef Tables t = _make_tables(p)
    cdef i64 n, k, l, s, b, b2
    out = [0] * count
    for n in range(count):
        s = 0
        for k in range(n + 1):
            b = binom(n, k, p, t)
            b2 = b * b % p
            if not b2:
                continue
            l = n - k
            if l < 0:
                l = 0
            while l <= k:
                s = (s + b2 * binom(n, l, p, t) % p * binom(k, l, p, t) % p
                     * binom(k + l, n, p, t)) % p
                l += 1
        out[n] = s
    _free_tables(t)
    return out


def trunc_a274786(count_in, p_in):
    cdef i64 p = p_in
    cdef i64 count = count_in
    cdef Tables t = _make_tables(p)
    cdef i64 n, k, s, b
    out = [0] * count
    for n in range(count):
        s = 0
        for k in range(n + 1):
            b = binom(n, k, p, t)
            s = (s + b * b % p * binom(n + k, k, p, t)) % p
        out[n] = s * binom(2 * n, n, p, t) % p
    _free_tables(t)
    return out


def trunc_a181418(count_in, p_in):
    cdef i64 p = p_in
    cdef i64 count = count_in
    cdef Tables t = _make_tables(p)
    cdef i64 n, k, s, b
    out = [0] * count
    for n in range(count):
        s = 0
        for k in range(n + 1):
            b = binom(n, k, p, t)
            s = (s + b * b % p * b) % p
        out[n] = s * binom(2 * n, n, p, t) % p
    _free_tables(t)
    return out


def trunc_a183204(count_in, p_in):
    cdef i64 p = p_in
    cdef i64 count = count_in
    cdef Tables t = _make_tables(p)
    cdef i64 n, k, s, b
    out = [0] * count
    for n in range(count):
        s = 0
        for k in range((n + 1) // 2, n + 1):
            b = binom(n, k, p, t)
            s = (s + b * b % p * binom(2 * k, n, p, t) % p
                 * binom(k + n, n, p, t)) % p
        out[n] = s
    _free_tables(t)
    return out


def trunc_a005260(count_in, p_in):
    cdef i64 p = p_in
    cdef i64 count = count_in
    cdef Tables t = _make_tables(p)
    cdef i64 n, k, s, b, b2
    out = [0] * count
    for n in range(count):
        s = 0
        for k in range(n + 1):
            b = binom(n, k, p, t)
            b2 = b * b % p
            s = (s + b2 * b2) % p
        out[n] = s
    _free_tables(t)
    return out
