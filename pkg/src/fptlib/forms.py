"""Sparse homogeneous forms and residues modulo Frobenius powers.

The central computation is the residue of f^N modulo the monomial ideal
(x_1^{p^e}, ..., x_n^{p^e}).  It is organized around the base-p digits of N:
writing N = sum c_t p^t, the residue is accumulated Horner-style from the
most significant digit down,

    acc_t  =  (acc_{t+1})^p * f^{c_t}   truncated at p^{e-t},

where raising to the p-th power multiplies exponent vectors by p and applies
Frobenius to coefficients.  Truncation at every level is exact: a monomial
with a component >= the level bound can only ever produce discarded
monomials later.  For the membership tests driving the exact threshold
engine the surviving windows stay tiny at every level, which is what makes
exhaustive censuses affordable.

Two engines share this scheme: a generic n-variable one on exponent-tuple
dicts (also handling one-parameter coefficient polynomials), and a faster
two-variable kernel on integer exponents used by censuses.
"""

from __future__ import annotations

import random
from math import gcd

from .errors import ParseError, ValidationError
from .gfpoly import FieldSpec, GFElem, UPoly


# ---------------------------------------------------------------------------
# the form type
# ---------------------------------------------------------------------------

class HomForm:
    """A nonzero homogeneous polynomial of degree d in n variables.

    ``terms`` maps exponent vectors (tuples of length n summing to d) to
    nonzero coefficients.  Coefficients are GFElem in concrete mode, or
    UPoly in one symbolic parameter in parametric mode.
    """

    __slots__ = ("n", "d", "field", "terms", "parametric", "_key")

    def __init__(self, field: FieldSpec, n: int, d: int, terms: dict, parametric: bool = False):
        if n < 1:
            raise ValidationError(f"need n >= 1 variables, got {n}")
        if d < 1:
            raise ValidationError(f"need degree >= 1, got {d}")
        clean = {}
        for exps, c in terms.items():
            exps = tuple(int(a) for a in exps)
            if len(exps) != n or any(a < 0 for a in exps):
                raise ValidationError(f"bad exponent vector {exps}")
            if sum(exps) != d:
                raise ValidationError(f"exponent vector {exps} does not have degree {d}")
            if parametric:
                if not isinstance(c, UPoly):
                    c = UPoly.const(field, c)
                if c.is_zero():
                    continue
            else:
                c = field.elem(c)
                if not c:
                    continue
            clean[exps] = c
        if not clean:
            raise ValidationError("the zero form is not allowed")
        self.field = field
        self.n = n
        self.d = d
        self.terms = clean
        self.parametric = parametric
        self._key = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_coeffs(cls, field: FieldSpec, coeffs, d: int | None = None) -> "HomForm":
        """Binary form from the coefficient list [a_0, ..., a_d] where a_i is
        the coefficient of x^(d-i) y^i.

        Plain integers are element encodings in [0, q); over the prime field
        that coincides with reduction mod p.
        """
        coeffs = list(coeffs)
        if d is None:
            d = len(coeffs) - 1
        if len(coeffs) != d + 1:
            raise ValidationError("coefficient list must have length d+1")
        terms = {}
        for i, c in enumerate(coeffs):
            if not isinstance(c, GFElem):
                enc = c % field.p if field.k == 1 else c
                if not 0 <= enc < field.q:
                    raise ValidationError(f"encoding {c} outside [0, {field.q})")
                c = GFElem(field, enc)
            terms[(d - i, i)] = c
        return cls(field, 2, d, terms)

    @classmethod
    def monomial(cls, field: FieldSpec, exps, coeff=1) -> "HomForm":
        exps = tuple(exps)
        return cls(field, len(exps), sum(exps), {exps: coeff})

    # -- basics ---------------------------------------------------------------
    def key(self):
        if self._key is None:
            if self.parametric:
                items = tuple(sorted((e, c.coeffs) for e, c in self.terms.items()))
            else:
                items = tuple(sorted((e, c.enc) for e, c in self.terms.items()))
            self._key = (self.n, self.d, self.field.p, self.field.k, items)
        return self._key

    def __eq__(self, other):
        return isinstance(other, HomForm) and self.field == other.field and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coeff(self, exps):
        exps = tuple(exps)
        if exps in self.terms:
            return self.terms[exps]
        return UPoly.zero(self.field) if self.parametric else self.field.zero()

    def coeff_list(self) -> list[int]:
        """Binary form as [a_0..a_d] encodings (concrete mode only)."""
        if self.n != 2 or self.parametric:
            raise ValidationError("coeff_list requires a concrete binary form")
        out = [0] * (self.d + 1)
        for (ax, ay), c in self.terms.items():
            out[ay] = c.enc
        return out

    def scale(self, c) -> "HomForm":
        if self.parametric:
            raise ValidationError("scale on parametric forms is unsupported")
        ce = self.field.elem(c)
        if not ce:
            raise ValidationError("cannot scale a form by zero")
        return HomForm(self.field, self.n, self.d,
                       {e: v * ce for e, v in self.terms.items()})

    def monic(self) -> "HomForm":
        """Normalize so the lexicographically largest exponent has coefficient 1."""
        lead = max(self.terms)
        return self.scale(self.terms[lead].inverse())

    def specialize(self, a) -> "HomForm":
        """Evaluate the parameter of a parametric form at ``a`` (may change field)."""
        if not self.parametric:
            raise ValidationError("specialize only applies to parametric forms")
        if isinstance(a, GFElem):
            K = a.field
        else:
            K = self.field
            a = K.elem(a)
        emb = K.embedding_from(self.field)
        terms = {}
        for exps, poly in self.terms.items():
            acc = 0
            for c in reversed(poly.coeffs):
                acc = K.addi(K.muli(acc, a.enc), emb(c))
            if acc:
                terms[exps] = GFElem(K, acc)
        if not terms:
            raise ValidationError("specialization vanishes identically")
        return HomForm(K, self.n, self.d, terms)

    def as_text(self) -> str:
        """Render in the CLI grammar: '+'-joined terms c*x1^a*...; x,y for n=2."""
        names = ["x", "y"] if self.n == 2 else [f"x{i+1}" for i in range(self.n)]
        parts = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            cs = str(c)
            need_paren = "+" in cs or "*" in cs or "^" in cs
            factors = []
            for name, a in zip(names, exps):
                if a == 1:
                    factors.append(name)
                elif a > 1:
                    factors.append(f"{name}^{a}")
            if not factors:
                parts.append(f"({cs})" if need_paren else cs)
                continue
            if cs == "1":
                parts.append("*".join(factors))
            else:
                head = f"({cs})" if need_paren else cs
                parts.append(head + "*" + "*".join(factors))
        return "+".join(parts)

    def __str__(self):
        return self.as_text()

    def __repr__(self):
        return f"HomForm({self.as_text()!r} over {self.field!r})"


class FrobTruncPoly:
    """Residue class modulo (x_1^{p^e}, ..., x_n^{p^e}): only monomials with
    every exponent < p^e are stored; everything else is the ideal."""

    __slots__ = ("field", "n", "e", "terms", "parametric")

    def __init__(self, field: FieldSpec, n: int, e: int, terms: dict, parametric: bool = False):
        self.field = field
        self.n = n
        self.e = e
        self.terms = terms
        self.parametric = parametric

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exps):
        exps = tuple(exps)
        if exps in self.terms:
            return self.terms[exps]
        return UPoly.zero(self.field) if self.parametric else self.field.zero()


# ---------------------------------------------------------------------------
# generic n-variable engine (dict of exponent tuples)
# ---------------------------------------------------------------------------

def _ops(field: FieldSpec, parametric: bool):
    """(mul, frob) callables on stored coefficient objects."""
    if parametric:
        def mul(a: UPoly, b: UPoly) -> UPoly:
            return a * b

        def frob(a: UPoly) -> UPoly:
            # (sum u_s a^s)^p = sum u_s^p a^(s*p)
            out = [0] * (len(a.coeffs) * field.p)
            for s, c in enumerate(a.coeffs):
                out[s * field.p] = field.frobi(c)
            return UPoly(field, out)

        return mul, frob

    def mulc(a: GFElem, b: GFElem) -> GFElem:
        return a * b

    def frobc(a: GFElem) -> GFElem:
        return a.frobenius()

    return mulc, frobc


def _dict_mul_trunc(A: dict, B: dict, bound: int | None, field, parametric) -> dict:
    mul, _ = _ops(field, parametric)
    add = (lambda a, b: a + b)
    out: dict = {}
    for e1, c1 in A.items():
        for e2, c2 in B.items():
            w = tuple(a + b for a, b in zip(e1, e2))
            if bound is not None and any(a >= bound for a in w):
                continue
            prod = mul(c1, c2)
            cur = out.get(w)
            out[w] = prod if cur is None else add(cur, prod)
    if parametric:
        return {e: c for e, c in out.items() if not c.is_zero()}
    return {e: c for e, c in out.items() if c}


def _dict_pow_trunc(base: dict, c: int, bound: int | None, field, n, parametric) -> dict:
    one = UPoly.one(field) if parametric else field.one()
    out = {(0,) * n: one}
    if c == 0:
        return out
    if bound is not None:
        base = {e: v for e, v in base.items() if all(a < bound for a in e)}
    cur = base
    while True:
        if c & 1:
            out = _dict_mul_trunc(out, cur, bound, field, parametric)
            if not out:
                return {}
        c >>= 1
        if not c:
            return out
        cur = _dict_mul_trunc(cur, cur, bound, field, parametric)
        if not cur:
            # a set bit remains, so the final product picks up a zero factor
            return {}


def pow_mod_frobenius(f: HomForm, N: int, e: int) -> FrobTruncPoly:
    """Residue of f^N modulo (x_1^{p^e}, ..., x_n^{p^e})."""
    if N < 0:
        raise ValidationError("exponent must be non-negative")
    if e < 1:
        raise ValidationError("Frobenius depth e must be >= 1")
    F, n, p = f.field, f.n, f.field.p
    one = UPoly.one(F) if f.parametric else F.one()
    if N == 0:
        return FrobTruncPoly(F, n, e, {(0,) * n: one}, f.parametric)
    digs = []
    m = N
    while m:
        digs.append(m % p)
        m //= p
    T = len(digs) - 1
    if T >= e:
        # the piece at place T is killed entirely: every monomial of
        # (f^{c_T})^{p^T} has a component >= p^T >= p^e
        return FrobTruncPoly(F, n, e, {}, f.parametric)
    mul, frob = _ops(F, f.parametric)
    acc = _dict_pow_trunc(f.terms, digs[T], p ** (e - T), F, n, f.parametric)
    for t in range(T - 1, -1, -1):
        bound = p ** (e - t)
        if not acc:
            break
        acc = {tuple(a * p for a in exps): frob(c) for exps, c in acc.items()}
        if digs[t]:
            piece = _dict_pow_trunc(f.terms, digs[t], bound, F, n, f.parametric)
            acc = _dict_mul_trunc(acc, piece, bound, F, f.parametric)
    return FrobTruncPoly(F, n, e, acc, f.parametric)


def in_frobenius_power(f: HomForm, N: int, e: int) -> bool:
    """Is f^N in the Frobenius power (x_1^{p^e}, ..., x_n^{p^e})?"""
    if f.n == 2 and not f.parametric:
        return _member2(f.field, f.coeff_list(), f.d, N, e)
    return pow_mod_frobenius(f, N, e).is_zero


def coeff_of_power(f: HomForm, N: int, j: int):
    """Coefficient of x^(dN-j) y^j in f^N (binary forms; full expansion)."""
    if f.n != 2:
        raise ValidationError("coeff_of_power requires a binary form")
    if N < 0 or not 0 <= j <= f.d * N:
        raise ValidationError(f"index j={j} out of range [0, {f.d * N}]")
    if N == 0:
        one = UPoly.one(f.field) if f.parametric else f.field.one()
        zero = UPoly.zero(f.field) if f.parametric else f.field.zero()
        return one if j == 0 else zero
    full = _dict_pow_trunc(f.terms, N, None, f.field, 2, f.parametric)
    exps = (f.d * N - j, j)
    if exps in full:
        return full[exps]
    return UPoly.zero(f.field) if f.parametric else f.field.zero()


# ---------------------------------------------------------------------------
# fast two-variable kernel (x-exponent ints, coefficient encodings)
# ---------------------------------------------------------------------------

def _mul2(A: dict, DA: int, B: dict, DB: int, bound: int, field: FieldSpec) -> dict:
    """Product of binary residues keyed by x-exponent, truncated at ``bound``."""
    D = DA + DB
    hi = bound - 1
    lo = D - hi
    muli, addi = field.muli, field.addi
    out: dict = {}
    for a1, c1 in A.items():
        for a2, c2 in B.items():
            al = a1 + a2
            if al > hi or al < lo:
                continue
            prod = muli(c1, c2)
            cur = out.get(al)
            if cur is None:
                if prod:
                    out[al] = prod
            else:
                s = addi(cur, prod)
                if s:
                    out[al] = s
                else:
                    del out[al]
    return out


def _pow2(base: dict, d: int, c: int, bound: int, field: FieldSpec) -> tuple[dict, int]:
    """(f^c truncated, degree of f^c) for a binary form given as {x_exp: enc}."""
    hi = bound - 1
    cur = {a: v for a, v in base.items() if a <= hi and d - a <= hi}
    Dc = d
    out: dict = {0: 1}
    Do = 0
    Dfinal = d * c
    while True:
        if c & 1:
            out = _mul2(out, Do, cur, Dc, bound, field)
            Do += Dc
            if not out:
                return {}, Dfinal
        c >>= 1
        if not c:
            return out, Dfinal
        cur = _mul2(cur, Dc, cur, Dc, bound, field)
        Dc *= 2
        if not cur:
            return {}, Dfinal


def _member2(field: FieldSpec, coeffs: list[int], d: int, N: int, e: int) -> bool:
    """f^N in (x^{p^e}, y^{p^e})?  coeffs[i] encodes the x^(d-i) y^i term."""
    if N == 0:
        return False
    p = field.p
    digs = []
    m = N
    while m:
        digs.append(m % p)
        m //= p
    T = len(digs) - 1
    if T >= e:
        return True
    fdict = {d - i: c for i, c in enumerate(coeffs) if c}
    acc, Dacc = _pow2(fdict, d, digs[T], p ** (e - T), field)
    if not acc:
        return True
    frobi = field.frobi
    k1 = field.k == 1
    for t in range(T - 1, -1, -1):
        bound = p ** (e - t)
        if k1:
            acc = {a * p: c for a, c in acc.items()}
        else:
            acc = {a * p: frobi(c) for a, c in acc.items()}
        Dacc *= p
        if digs[t]:
            piece, Dp = _pow2(fdict, d, digs[t], bound, field)
            if not piece:
                return True
            acc = _mul2(acc, Dacc, piece, Dp, bound, field)
            Dacc += Dp
            if not acc:
                return True
    return False


# ---------------------------------------------------------------------------
# structure of binary forms
# ---------------------------------------------------------------------------

def _split_xy(f: HomForm) -> tuple[int, int, UPoly]:
    """Write f = x^alpha y^beta * core and dehomogenize core at y=1.

    The returned polynomial h(u) satisfies h(0) != 0 and deg h = deg core, so
    all multiplicity questions about core reduce to h.
    """
    xs = [e[0] for e in f.terms]
    ys = [e[1] for e in f.terms]
    alpha, beta = min(xs), min(ys)
    top = max(xs)
    cs = [0] * (top - alpha + 1)
    for (ax, ay), c in f.terms.items():
        cs[ax - alpha] = c.enc
    return alpha, beta, UPoly(f.field, cs)


def is_squarefree_binary(f: HomForm) -> bool:
    """True iff the binary form has no repeated linear factor over the closure."""
    if f.n != 2:
        raise ValidationError("squarefree test requires a binary form")
    if f.parametric:
        raise ValidationError("squarefree test requires a concrete form")
    alpha, beta, h = _split_xy(f)
    if alpha > 1 or beta > 1:
        return False
    if h.degree == 0:
        return True
    return h.is_squarefree()


def _upoly_mth_root(h: UPoly, m: int) -> UPoly | None:
    """Exact m-th root of a univariate polynomial with h(0) != 0, p not | m."""
    F = h.field
    if h.degree % m:
        return None
    t = h.degree // m
    c0 = _scalar_root(F, h.coeff(0), m)
    if c0 is None:
        return None
    g = [c0]
    minv = F.invi(m % F.p) if m % F.p else None
    if minv is None:
        return None
    lead_inv = F.muli(minv, F.invi(F.powi(c0, m - 1)))
    for i in range(1, t + 1):
        # coefficient of u^i in (current g)^m, missing only the m*g_i*c0^(m-1) part
        partial = UPoly(F, g + [0])
        pm = partial.pow(m)
        gi = F.muli(F.subi(h.coeff(i), pm.coeff(i)), lead_inv)
        g.append(gi)
    cand = UPoly(F, g)
    return cand if cand.pow(m) == h else None


def _scalar_root(field: FieldSpec, c_enc: int, r: int) -> int | None:
    """An r-th root of a nonzero field element, or None."""
    if c_enc == 0:
        return 0
    p, q = field.p, field.q
    while r % p == 0:
        c_enc = field.pth_rooti(c_enc)
        r //= p
    if r == 1 or c_enc == 1:
        return c_enc
    g = gcd(r, q - 1)
    if field.powi(c_enc, (q - 1) // g) != 1:
        return None
    if g == 1:
        return field.powi(c_enc, pow(r, -1, q - 1))
    for w in range(1, q):
        if field.powi(w, r) == c_enc:
            return w
    return None


def _divisors_desc(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    out.reverse()
    return out


def perfect_power_decompose(f: HomForm) -> tuple[HomForm, int]:
    """Maximal (g, r) with g^r = f exactly (r = 1 when f is not a proper power).

    The p-power part is peeled off with coefficientwise p-th roots; the
    remaining tame part is extracted by exact m-th roots (dehomogenized for
    binary forms, through a Kronecker substitution for n >= 3) and verified
    by re-expansion.
    """
    if f.parametric:
        raise ValidationError("perfect-power decomposition requires a concrete form")
    F, p = f.field, f.field.p
    lead = max(f.terms)
    c_lead = f.terms[lead]
    fm = f.scale(c_lead.inverse()) if c_lead.enc != 1 else f
    # peel Frobenius powers
    s = 0
    h = fm
    while h.d > 1 and all(a % p == 0 for e in h.terms for a in e):
        terms = {tuple(a // p for a in e): GFElem(F, F.pth_rooti(c.enc))
                 for e, c in h.terms.items()}
        h = HomForm(F, h.n, h.d // p, terms)
        s += 1
    base, m = h, 1
    if h.d > 1:
        for cand in _divisors_desc(h.d):
            if cand == 1 or cand % p == 0:
                continue
            g = _mth_root_form(h, cand)
            if g is not None:
                base, m = g, cand
                break
    r0 = m * p ** s
    if r0 == 1:
        return f, 1
    # reattach the leading scalar: need an r-th root of it in the field
    for r in _divisors_desc(r0):
        w = _scalar_root(F, c_lead.enc, r)
        if w is not None:
            if r == 1:
                return f, 1
            g = _form_pow(base, r0 // r)
            if w != 1:
                g = g.scale(GFElem(F, w))
            return g, r
    return f, 1


def _form_pow(f: HomForm, r: int) -> HomForm:
    out = None
    cur = f
    while r:
        if r & 1:
            out = cur if out is None else _form_mul(out, cur)
        r >>= 1
        if r:
            cur = _form_mul(cur, cur)
    return out


def _form_mul(a: HomForm, b: HomForm) -> HomForm:
    terms = _dict_mul_trunc(a.terms, b.terms, None, a.field, False)
    return HomForm(a.field, a.n, a.d + b.d, terms)


def _mth_root_form(h: HomForm, m: int) -> HomForm | None:
    """Exact monic m-th root of a homogeneous form, or None."""
    F = h.field
    if h.n == 2:
        alpha, beta, hu = _split_xy(h)
        if alpha % m or beta % m:
            return None
        g = _upoly_mth_root(hu.monic(), m)
        if g is None:
            return None
        w = _scalar_root(F, hu.leading(), m)
        if w is None:
            return None
        dd = h.d // m
        terms = {}
        a0, b0 = alpha // m, beta // m
        for i, c in enumerate(g.coeffs):
            if c:
                terms[(a0 + i, dd - a0 - i)] = GFElem(F, F.muli(c, w))
        try:
            cand = HomForm(F, 2, dd, terms)
        except ValidationError:
            return None
        return cand if _form_pow(cand, m) == h else None
    # Kronecker substitution: x_i -> u^{(d+1)^i} is a ring map, injective on
    # the exponent boxes involved, so an m-th root upstairs maps to one here.
    base = h.d + 1
    if base ** h.n > 2_000_000:
        raise ValidationError("perfect-power check too large for this degree/arity")
    top = 0
    flat: dict[int, int] = {}
    for exps, c in h.terms.items():
        idx = 0
        for i, a in enumerate(exps):
            idx += a * base ** i
        flat[idx] = c.enc
        top = max(top, idx)
    cs = [0] * (top + 1)
    for idx, enc in flat.items():
        cs[idx] = enc
    hu = UPoly(F, cs)
    val = next(i for i, c in enumerate(cs) if c)  # u-multiplicity
    if val % m:
        return None
    hu = UPoly(F, cs[val:])
    g = _upoly_mth_root(hu.monic(), m)
    if g is None:
        return None
    w = _scalar_root(F, hu.leading(), m)
    if w is None:
        return None
    dd = h.d // m
    terms = {}
    for i, c in enumerate(g.coeffs):
        if not c:
            continue
        idx = i + val // m
        exps = []
        for _ in range(h.n):
            exps.append(idx % base)
            idx //= base
        if idx or sum(exps) != dd:
            return None
        terms[tuple(exps)] = GFElem(F, F.muli(c, w))
    try:
        cand = HomForm(F, h.n, dd, terms)
    except ValidationError:
        return None
    return cand if _form_pow(cand, m) == h else None


# ---------------------------------------------------------------------------
# coordinate changes
# ---------------------------------------------------------------------------

def _det(field: FieldSpec, rows: list[list[int]]) -> int:
    """Determinant of a square matrix of encodings, by Gaussian elimination."""
    n = len(rows)
    a = [row[:] for row in rows]
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = field.negi(det)
        det = field.muli(det, a[col][col])
        inv = field.invi(a[col][col])
        for r in range(col + 1, n):
            if a[r][col]:
                m = field.muli(a[r][col], inv)
                for cc in range(col, n):
                    a[r][cc] = field.subi(a[r][cc], field.muli(m, a[col][cc]))
    return det


def substitute_linear(f: HomForm, T) -> HomForm:
    """Compose f with the substitution x_i -> sum_j T[i][j] x_j (T invertible)."""
    if f.parametric:
        raise ValidationError("substitution on parametric forms is unsupported")
    F, n = f.field, f.n
    rows = [[F.elem(T[i][j]).enc for j in range(n)] for i in range(n)]
    if _det(F, rows) == 0:
        raise ValidationError("substitution matrix is singular")
    # linear forms as term dicts
    unit = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    linear = []
    for i in range(n):
        lin = {unit[j]: GFElem(F, rows[i][j]) for j in range(n) if rows[i][j]}
        linear.append(lin)
    out: dict = {}
    for exps, c in f.terms.items():
        term = {(0,) * n: c}
        for i, a in enumerate(exps):
            for _ in range(a):
                term = _dict_mul_trunc(term, linear[i], None, F, False)
        for w, v in term.items():
            cur = out.get(w)
            s = v if cur is None else cur + v
            if s:
                out[w] = s
            elif cur is not None:
                del out[w]
    return HomForm(F, n, f.d, out)


def random_form(field: FieldSpec, n: int, d: int, rng: random.Random) -> HomForm:
    """Uniformly random nonzero degree-d form (dense coefficient sampling)."""
    from itertools import combinations_with_replacement

    exps_list = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        exps_list.append(tuple(e))
    while True:
        terms = {}
        for e in exps_list:
            c = rng.randrange(field.q)
            if c:
                terms[e] = GFElem(field, c)
        if terms:
            return HomForm(field, n, d, terms)


# ---------------------------------------------------------------------------
# text grammar
# ---------------------------------------------------------------------------

class _Parser:
    """Recursive descent for '+/-'-joined products of integers, variables
    x, y, x1..xn, the field generator t, parenthesized subexpressions, and
    '^' powers.  Evaluates directly to a multivariate term dict."""

    def __init__(self, text: str, field: FieldSpec, n_hint: int | None):
        self.text = text
        self.pos = 0
        self.field = field
        self.n = n_hint
        self.max_var = 0

    def error(self, msg: str):
        raise ParseError(msg, self.pos)

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> dict:
        ch = self.peek()
        neg = False
        if ch in ("+", "-"):
            self.pos += 1
            neg = ch == "-"
        acc = self.term()
        if neg:
            acc = {e: -c for e, c in acc.items()}
        while True:
            ch = self.peek()
            if ch not in ("+", "-"):
                break
            self.pos += 1
            t = self.term()
            if ch == "-":
                t = {e: -c for e, c in t.items()}
            for e, c in t.items():
                cur = acc.get(e)
                s = c if cur is None else cur + c
                if s:
                    acc[e] = s
                elif cur is not None:
                    del acc[e]
        return acc

    def term(self) -> dict:
        acc = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                acc = self._mul(acc, self.factor())
            elif ch.isalnum() or ch == "(":
                # implicit multiplication, e.g. "2x" or "x(x+y)"
                acc = self._mul(acc, self.factor())
            else:
                return acc

    def _mul(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                w = tuple(x + y for x, y in zip(e1, e2))
                cur = out.get(w)
                s = c1 * c2 if cur is None else cur + c1 * c2
                if s:
                    out[w] = s
                elif cur is not None:
                    del out[w]
        return out

    def factor(self) -> dict:
        base = self.atom()
        while self.peek() == "^":
            self.pos += 1
            expo = self.integer()
            out = {(0,) * self._width(): self.field.one()}
            for _ in range(expo):
                out = self._mul(out, base)
            base = out
        return base

    def _width(self) -> int:
        # provisional width when n is inferred; trimmed to the variables used
        return self.n if self.n is not None else 12

    def atom(self) -> dict:
        ch = self.peek()
        w = self._width()
        if ch == "":
            self.error("unexpected end of input")
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return inner
        if ch.isdigit():
            c = self.field.elem(self.integer())
            return {(0,) * w: c} if c else {}
        if ch == "t":
            self.pos += 1
            if self.field.k == 1:
                self.error("generator t is undefined over a prime field")
            return {(0,) * w: self.field.gen()}
        if ch in ("x", "y"):
            self.pos += 1
            idx = 0
            if ch == "y":
                idx = 1
            elif self.pos < len(self.text) and self.text[self.pos].isdigit():
                idx = self.integer() - 1
                if idx < 0:
                    self.error("variable indices start at x1")
            self.max_var = max(self.max_var, idx + 1)
            if idx >= w:
                if self.n is None:
                    self.error(f"more than {w} variables need an explicit n")
                self.error(f"variable index {idx + 1} exceeds n={w}")
            e = tuple(1 if i == idx else 0 for i in range(w))
            return {e: self.field.one()}
        self.error(f"unexpected character {ch!r}")

    def integer(self) -> int:
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])


def parse_form(text: str, field: FieldSpec, n: int | None = None) -> HomForm:
    """Parse the CLI polynomial grammar into a HomForm.

    Variables may be written x, y or x1..xn; '*' between factors is optional;
    coefficients are integers or parenthesized expressions in the generator t.
    The result must be homogeneous and nonzero.
    """
    ps = _Parser(text, field, n)
    terms = ps.expr()
    if ps.peek() != "":
        ps.error("trailing input")
    if not terms:
        raise ParseError("polynomial is zero", 0)
    width = n if n is not None else max(ps.max_var, 1)
    if n is None and any(e[1] for e in terms):
        width = max(width, 2)
    trimmed = {}
    for e, c in terms.items():
        if any(e[i] for i in range(width, len(e))):
            raise ParseError(f"form uses more than n={width} variables", 0)
        trimmed[e[:width]] = c
    degs = {sum(e) for e in trimmed}
    if len(degs) != 1:
        raise ParseError(f"polynomial is not homogeneous (degrees {sorted(degs)})", 0)
    d = degs.pop()
    if d == 0:
        raise ParseError("constant polynomials are not forms", 0)
    return HomForm(field, width, d, trimmed)
