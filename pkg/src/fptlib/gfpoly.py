"""Finite fields F_{p^k} and univariate polynomial utilities.

Fields are constructed with a deterministic modulus (the lexicographically
smallest monic irreducible of degree k, by descending-degree coefficient
tuple), so witness reports are reproducible across runs and machines.
Elements are stored as integer encodings sum(c_i * p^i); small fields cache
a multiplication table, larger ones reduce on the fly.

UPoly provides exactly the univariate machinery the rest of the package
needs: gcd, derivative, squarefree test, in-field root extraction, and
composition-free modular powering.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import ValidationError
from .ratbase import require_prime

_TABLE_MAX_Q = 512          # build full add/mul tables up to this field size
_ROOT_BRUTE_MAX_Q = 1_000_000  # exhaustive root search cutoff


# ---------------------------------------------------------------------------
# dense F_p[x] helpers on plain int lists (ascending degree, trimmed)
# ---------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    # m monic
    a = a[:]
    dm = len(m) - 1
    while len(a) > dm:
        c = a[-1]
        if c:
            off = len(a) - 1 - dm
            for t in range(dm):
                a[off + t] = (a[off + t] - c * m[t]) % p
        a.pop()
    return _trim(a)


def _ppowmod(a: list[int], n: int, m: list[int], p: int) -> list[int]:
    out = [1]
    base = _pmod(a, m, p)
    while n:
        if n & 1:
            out = _pmod(_pmul(out, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        n >>= 1
    return out


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(a[:]), _trim(b[:])
    while b:
        inv = pow(b[-1], -1, p)
        bm = [c * inv % p for c in b]
        a, b = b, _pmod(a, bm, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _is_irreducible_mod_p(m: list[int], p: int) -> bool:
    """Rabin test for a monic polynomial over F_p."""
    k = len(m) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    xp = [_ppowmod(x, p, m, p)]  # xp[j] = x^{p^{j+1}} mod m
    for _ in range(k - 1):
        xp.append(_ppowmod(xp[-1], p, m, p))
    if xp[k - 1] != _pmod(x, m, p):
        return False

    def _coprime_at(j: int) -> bool:
        g = xp[j - 1][:]
        while len(g) < 2:
            g.append(0)
        g[1] = (g[1] - 1) % p
        return len(_pgcd(g, m, p)) == 1

    # gcd(x^{p^{k/ell}} - x, m) = 1 for every prime ell | k
    ell = 2
    kk = k
    while ell * ell <= kk:
        if kk % ell == 0:
            if not _coprime_at(k // ell):
                return False
            while kk % ell == 0:
                kk //= ell
        ell += 1
    if kk > 1 and not _coprime_at(k // kk):
        return False
    return True


def _smallest_modulus(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over F_p."""
    if k == 1:
        return (0, 1)
    for enc in range(p ** k):
        cs = []
        m = enc
        for _ in range(k):
            cs.append(m % p)
            m //= p
        cand = cs + [1]
        if _is_irreducible_mod_p(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# field of q = p^k elements
# ---------------------------------------------------------------------------

class FieldSpec:
    """The finite field F_{p^k} = F_p[t]/(modulus).

    Elements are integer encodings in [0, q); the low-level *_i methods work
    on encodings, and `elem` wraps one into a GFElem.
    """

    __slots__ = ("p", "k", "q", "modulus", "_mul_table", "_rng", "_embed_cache")

    def __init__(self, p: int, k: int = 1, modulus: tuple[int, ...] | None = None):
        require_prime(p)
        if k < 1:
            raise ValidationError(f"extension degree must be >= 1, got {k}")
        self.p = p
        self.k = k
        self.q = p ** k
        if modulus is None:
            modulus = _smallest_modulus(p, k)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValidationError("modulus must be monic of degree k")
        if k > 1 and not _is_irreducible_mod_p(list(modulus), p):
            raise ValidationError(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = modulus
        self._mul_table: list[list[int]] | None = None
        self._embed_cache: dict = {}

    # -- identity ----------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, k={self.k})"

    # -- encoding helpers ----------------------------------------------------
    def coeffs_of(self, enc: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            out.append(enc % self.p)
            enc //= self.p
        return tuple(out)

    def enc_of(self, coeffs) -> int:
        enc = 0
        for c in reversed(list(coeffs)):
            enc = enc * self.p + (c % self.p)
        return enc

    # -- arithmetic on encodings ---------------------------------------------
    def addi(self, a: int, b: int) -> int:
        p = self.p
        if self.k == 1:
            return (a + b) % p
        out = 0
        mult = 1
        while a or b:
            out += ((a % p) + (b % p)) % p * mult
            a //= p
            b //= p
            mult *= p
        return out

    def negi(self, a: int) -> int:
        p = self.p
        if self.k == 1:
            return (-a) % p
        out = 0
        mult = 1
        while a:
            out += (-(a % p)) % p * mult
            a //= p
            mult *= p
        return out

    def subi(self, a: int, b: int) -> int:
        return self.addi(a, self.negi(b))

    def _mul_raw(self, a: int, b: int) -> int:
        p = self.p
        ca = list(self.coeffs_of(a))
        cb = list(self.coeffs_of(b))
        prod = _pmod(_pmul(ca, cb, p), list(self.modulus), p)
        return self.enc_of(prod + [0] * (self.k - len(prod)))

    def muli(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        tab = self._mul_table
        if tab is None and self.q <= _TABLE_MAX_Q:
            tab = [[self._mul_raw(x, y) for y in range(self.q)] for x in range(self.q)]
            self._mul_table = tab
        if tab is not None:
            return tab[a][b]
        return self._mul_raw(a, b)

    def powi(self, a: int, n: int) -> int:
        if self.k == 1:
            return pow(a, n, self.p) if n >= 0 else pow(pow(a, -1, self.p), -n, self.p)
        if n < 0:
            return self.powi(self.invi(a), -n)
        out = 1
        base = a
        while n:
            if n & 1:
                out = self.muli(out, base)
            base = self.muli(base, base)
            n >>= 1
        return out

    def invi(self, a: int) -> int:
        if a == 0:
            raise ValidationError("zero has no inverse")
        if self.k == 1:
            return pow(a, -1, self.p)
        return self.powi(a, self.q - 2)

    def frobi(self, a: int) -> int:
        """The field automorphism x -> x^p on encodings."""
        if self.k == 1:
            return a
        return self.powi(a, self.p)

    def pth_rooti(self, a: int) -> int:
        """Inverse of Frobenius (always exists: the field is perfect)."""
        if self.k == 1:
            return a
        return self.powi(a, self.p ** (self.k - 1))

    # -- element-level API -----------------------------------------------------
    def elem(self, x) -> "GFElem":
        if isinstance(x, GFElem):
            if x.field != self:
                raise ValidationError("element belongs to a different field")
            return x
        if isinstance(x, int):
            return GFElem(self, x % self.p if self.k == 1 else self._enc_from_int(x))
        return GFElem(self, self.enc_of(x))

    def _enc_from_int(self, x: int) -> int:
        # integers embed through the prime subfield
        return x % self.p

    def zero(self) -> "GFElem":
        return GFElem(self, 0)

    def one(self) -> "GFElem":
        return GFElem(self, 1)

    def gen(self) -> "GFElem":
        if self.k == 1:
            raise ValidationError(f"F_{self.p} has no extension generator t")
        return GFElem(self, self.p)  # the class of t

    def elements(self):
        for enc in range(self.q):
            yield GFElem(self, enc)

    def random_elem(self, rng: random.Random) -> "GFElem":
        return GFElem(self, rng.randrange(self.q))

    def elem_str(self, enc: int) -> str:
        if self.k == 1:
            return str(enc)
        cs = self.coeffs_of(enc)
        parts = []
        for i in range(self.k - 1, -1, -1):
            c = cs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("t" if c == 1 else f"{c}*t")
            else:
                parts.append(f"t^{i}" if c == 1 else f"{c}*t^{i}")
        return "+".join(parts) if parts else "0"

    # -- embeddings -------------------------------------------------------------
    def embedding_from(self, src: "FieldSpec"):
        """Encoding map realizing F_{p^j} inside this field (j | k required)."""
        if src == self:
            return lambda enc: enc
        if src.p != self.p or self.k % src.k != 0:
            raise ValidationError(f"{src!r} does not embed in {self!r}")
        if src.k == 1:
            return lambda enc: enc  # prime subfield: constants encode identically
        key = (src.p, src.k, src.modulus)
        table = self._embed_cache.get(key)
        if table is None:
            if self.q > _ROOT_BRUTE_MAX_Q:
                raise ValidationError("embedding search too large for this field")
            root = None
            mod = src.modulus
            for cand in range(self.q):
                acc = 0
                for c in reversed(mod):
                    acc = self.addi(self.muli(acc, cand), c % self.p)
                if acc == 0:
                    root = cand
                    break
            if root is None:
                raise AssertionError("embedding root must exist")
            table = [0] * src.q
            for enc in range(src.q):
                acc = 0
                for c in reversed(src.coeffs_of(enc)):
                    acc = self.addi(self.muli(acc, root), c)
                table[enc] = acc
            self._embed_cache[key] = table
        return lambda enc: table[enc]


class GFElem:
    """An element of a FieldSpec, hashable and immutable."""

    __slots__ = ("field", "enc")

    def __init__(self, field: FieldSpec, enc: int):
        self.field = field
        self.enc = enc

    def __bool__(self):
        return self.enc != 0

    def __eq__(self, other):
        if isinstance(other, GFElem):
            return self.enc == other.enc and self.field == other.field
        if isinstance(other, int):
            return self == self.field.elem(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.enc, self.field.p, self.field.k))

    def _coerce(self, other) -> "GFElem":
        if isinstance(other, GFElem):
            if other.field != self.field:
                raise ValidationError("mixed-field arithmetic")
            return other
        if isinstance(other, int):
            return self.field.elem(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return GFElem(self.field, self.field.addi(self.enc, o.enc))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return GFElem(self.field, self.field.subi(self.enc, o.enc))

    def __rsub__(self, other):
        return self.field.elem(other) - self

    def __neg__(self):
        return GFElem(self.field, self.field.negi(self.enc))

    def __mul__(self, other):
        o = self._coerce(other)
        return GFElem(self.field, self.field.muli(self.enc, o.enc))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return self * o.inverse()

    def __pow__(self, n: int):
        return GFElem(self.field, self.field.powi(self.enc, n))

    def inverse(self) -> "GFElem":
        return GFElem(self.field, self.field.invi(self.enc))

    def frobenius(self) -> "GFElem":
        return GFElem(self.field, self.field.frobi(self.enc))

    def __str__(self):
        return self.field.elem_str(self.enc)

    def __repr__(self):
        return f"GFElem({self.field!r}, {self})"


# ---------------------------------------------------------------------------
# univariate polynomials over a FieldSpec
# ---------------------------------------------------------------------------

class UPoly:
    """Univariate polynomial over F_{p^k}; coefficients stored as encodings,
    ascending degree, trailing zeros trimmed.  The zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs):
        cs = [c.enc if isinstance(c, GFElem) else c % field.p if field.k == 1 else c
              for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def const(cls, field, c):
        return cls(field, (field.elem(c).enc,))

    # -- basics ---------------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        if not self.coeffs:
            raise ValidationError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        return (
            isinstance(other, UPoly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, self.field.p, self.field.k))

    def __str__(self):
        if not self.coeffs:
            return "0"
        F = self.field
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeff(i)
            if not c:
                continue
            cs = F.elem_str(c)
            if F.k > 1 and ("+" in cs or "*" in cs or "^" in cs):
                cs = f"({cs})"
            if i == 0:
                parts.append(cs)
            else:
                head = "u" if i == 1 else f"u^{i}"
                parts.append(head if cs == "1" else f"{cs}*{head}")
        return "+".join(parts)

    __repr__ = __str__

    # -- arithmetic --------------------------------------------------------------
    def _bin(self, other, op):
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(F, [op(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __add__(self, other):
        return self._bin(other, self.field.addi)

    def __sub__(self, other):
        return self._bin(other, self.field.subi)

    def __neg__(self):
        F = self.field
        return UPoly(F, [F.negi(c) for c in self.coeffs])

    def __mul__(self, other):
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly.zero(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = F.addi(out[i + j], F.muli(ai, bj))
        return UPoly(F, out)

    def scale(self, c) -> "UPoly":
        # plain ints are encodings here, matching the coefficient convention
        F = self.field
        ce = c.enc if isinstance(c, GFElem) else c
        return UPoly(F, [F.muli(ce, a) for a in self.coeffs])

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        return self.scale(self.field.invi(self.leading()))

    def divmod(self, other) -> tuple["UPoly", "UPoly"]:
        F = self.field
        if other.is_zero():
            raise ValidationError("division by zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        inv = F.invi(other.leading())
        q = [0] * max(0, len(rem) - db)
        while len(rem) - 1 >= db and rem:
            c = F.muli(rem[-1], inv)
            off = len(rem) - 1 - db
            q[off] = c
            for t in range(db + 1):
                rem[off + t] = F.subi(rem[off + t], F.muli(c, other.coeff(t)))
            while rem and rem[-1] == 0:
                rem.pop()
        return UPoly(F, q), UPoly(F, rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def gcd(self, other) -> "UPoly":
        """Monic greatest common divisor; gcd(f, 0) = monic(f)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "UPoly":
        F = self.field
        return UPoly(F, [F.muli(i % F.p, self.coeff(i)) for i in range(1, len(self.coeffs))])

    def pow(self, n: int, mod: "UPoly | None" = None) -> "UPoly":
        out = UPoly.one(self.field)
        base = self if mod is None else self % mod
        while n:
            if n & 1:
                out = out * base
                if mod is not None:
                    out = out % mod
            base = base * base
            if mod is not None:
                base = base % mod
            n >>= 1
        return out

    def eval_enc(self, x_enc: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.addi(F.muli(acc, x_enc), c)
        return acc

    def __call__(self, x) -> GFElem:
        return GFElem(self.field, self.eval_enc(self.field.elem(x).enc))

    # -- structure ---------------------------------------------------------------
    def is_squarefree(self) -> bool:
        """No repeated roots over the algebraic closure.

        If f' != 0 this is gcd(f, f') being constant; if f' = 0 then f is a
        polynomial in u^p, hence a p-th power over a perfect field, and so
        not squarefree unless constant.
        """
        if self.is_zero():
            raise ValidationError("squarefree test on the zero polynomial")
        if self.degree == 0:
            return True
        d = self.derivative()
        if d.is_zero():
            return False
        return self.gcd(d).degree == 0

    def map_to(self, target: FieldSpec) -> "UPoly":
        emb = target.embedding_from(self.field)
        return UPoly(target, [emb(c) for c in self.coeffs])

    def roots_in(self, target: FieldSpec | None = None) -> list[GFElem]:
        """All roots lying in ``target`` (default: own field), each once,
        sorted by encoding.  Exhaustive scan for small fields; for large ones
        the in-field part is split off with u^q - u and then factored by
        randomized splitting.
        """
        K = target or self.field
        f = self.map_to(K) if K != self.field else self
        if f.is_zero():
            raise ValidationError("roots of the zero polynomial")
        if f.degree == 0:
            return []
        if K.q <= _ROOT_BRUTE_MAX_Q:
            return [GFElem(K, e) for e in range(K.q) if f.eval_enc(e) == 0]
        # strip repeated roots cheaply: work with the squarefree part
        d = f.derivative()
        if d.is_zero():
            # f = h^p with h the coefficient-wise p-th root; same roots
            h = UPoly(K, [K.pth_rooti(f.coeff(i)) for i in range(0, len(f.coeffs), K.p)])
            return h.roots_in(K)
        g = f.gcd(d)
        if g.degree > 0:
            f = f.divmod(g)[0]
        # in-field part: gcd(f, u^q - u)
        xq = UPoly.x(K).pow(K.q, mod=f)
        lin = f.gcd(xq - UPoly.x(K))
        rng = random.Random(0xF9)
        out = sorted(e.enc for e in _split_linear(lin, rng))
        return [GFElem(K, e) for e in out]


def _split_linear(g: UPoly, rng: random.Random) -> list[GFElem]:
    """Roots of a product of distinct monic linear factors, by random splitting."""
    K = g.field
    if g.degree <= 0:
        return []
    if g.degree == 1:
        c = K.muli(K.negi(g.coeff(0)), K.invi(g.coeff(1)))
        return [GFElem(K, c)]
    while True:
        r = rng.randrange(1, K.q)
        s = rng.randrange(K.q)
        probe = UPoly(K, (s, r))  # r*u + s
        if K.p == 2:
            # trace map T(z) = z + z^2 + ... + z^{2^{m-1}}, m = log2(q)
            m = K.k  # q = 2^k
            z = probe % g
            acc = z
            for _ in range(m - 1):
                z = (z * z) % g
                acc = acc + z
            h = g.gcd(acc)
        else:
            h = g.gcd(probe.pow((K.q - 1) // 2, mod=g) - UPoly.one(K))
        if 0 < h.degree < g.degree:
            rest = g.divmod(h)[0]
            return _split_linear(h, rng) + _split_linear(rest, rng)
