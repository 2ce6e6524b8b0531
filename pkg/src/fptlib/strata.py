"""Stratification machinery: candidate filters, censuses, witness searches.

Writing 2/d = a/b in lowest terms, a truncation place L can only carry the
threshold of a reduced binary form if

  (I)   gcd(p, b) = 1 implies L <= ord of p in (Z/bZ)^*,
  (II)  p > b implies a < (a*p^e' mod b) for every 1 <= e' < L,
  (III) 1 <= (a*p^L mod b) <= b - a,

and additionally the truncation value must avoid the excluded open interval
(1/p, 1/(p-1)).  These conditions are necessary, not sufficient; censuses
below enumerate actual coefficient spaces and check observed values against
the candidate list, raising an anomaly on any violation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import AnomalyError, BudgetError, ValidationError
from .forms import HomForm, in_frobenius_power, is_squarefree_binary, pow_mod_frobenius
from .fptengine import fpt_binary_exact
from .genericfpt import generic_fpt_binary
from .gfpoly import FieldSpec, GFElem, UPoly
from .ratbase import bms_excluded, min_e_two_p_pow, mult_order, require_prime, trunc

DEFAULT_BUDGET = 2_000_000


# ---------------------------------------------------------------------------
# candidate truncations
# ---------------------------------------------------------------------------

def hnwz_flags(d: int, p: int, L: int) -> tuple[bool, bool, bool]:
    """The three necessary conditions at place L, each vacuously true outside
    its guard (I needs gcd(p,b)=1, II needs p>b)."""
    if d < 2 or L < 1:
        raise ValidationError("need d >= 2 and L >= 1")
    require_prime(p)
    lam = Fraction(2, d)
    a, b = lam.numerator, lam.denominator
    if gcd(p, b) == 1:
        cond1 = L <= mult_order(p, b)
    else:
        cond1 = True
    if p > b:
        cond2 = all(a < (a * p ** e1) % b for e1 in range(1, L))
    else:
        cond2 = True
    rem = (a * p ** L) % b
    cond3 = 1 <= rem <= b - a
    return cond1, cond2, cond3


@dataclass(frozen=True)
class CandidateEntry:
    L: int
    value: Fraction
    cond_I: bool
    cond_II: bool
    cond_III: bool
    bms_excluded: bool
    above_generic: bool = False   # exceeds the closed-form maximum

    @property
    def admissible(self) -> bool:
        return (self.cond_I and self.cond_II and self.cond_III
                and not self.bms_excluded and not self.above_generic
                and self.value > 0)

    def to_dict(self) -> dict:
        return {"L": self.L, "value": str(self.value), "cond_I": self.cond_I,
                "cond_II": self.cond_II, "cond_III": self.cond_III,
                "bms_excluded": self.bms_excluded,
                "above_generic": self.above_generic,
                "admissible": self.admissible}


@dataclass(frozen=True)
class CandidateReport:
    d: int
    p: int
    entries: tuple[CandidateEntry, ...]
    generic_value: Fraction
    generic_L: int | None         # None when the generic value is 2/d itself

    def admissible_values(self) -> list[Fraction]:
        vals = {e.value for e in self.entries if e.admissible}
        if self.generic_L is None:
            vals.add(self.generic_value)
        return sorted(vals)

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "d": self.d, "p": self.p,
            "entries": [e.to_dict() for e in self.entries],
            "generic_value": str(self.generic_value),
            "generic_L": self.generic_L,
        }

    def to_csv_rows(self) -> list[list[str]]:
        rows = [["L", "value", "cond_I", "cond_II", "cond_III",
                 "bms_excluded", "above_generic", "admissible"]]
        for e in self.entries:
            rows.append([str(e.L), str(e.value), str(e.cond_I), str(e.cond_II),
                         str(e.cond_III), str(e.bms_excluded),
                         str(e.above_generic), str(e.admissible)])
        return rows


def candidates(d: int, p: int, l_cap: int = 12) -> CandidateReport:
    """All candidate truncation places with their condition flags, plus the
    generic (maximal) value.  When gcd(p, b) = 1 the range of places is the
    order bound from condition (I); otherwise ``l_cap`` bounds the listing."""
    if d < 2:
        raise ValidationError("need d >= 2")
    require_prime(p)
    lam = Fraction(2, d)
    b = lam.denominator
    bound = mult_order(p, b) if b % p else l_cap
    gval = generic_fpt_binary(d, p)
    gL = None
    if gval != lam:
        gL = min_e_two_p_pow(d, p, target=1)
    entries = []
    for L in range(1, bound + 1):
        c1, c2, c3 = hnwz_flags(d, p, L)
        val = trunc(lam, p, L).value
        excl = bms_excluded(val, p) if val > 0 else False
        entries.append(CandidateEntry(L, val, c1, c2, c3, excl, val > gval))
    return CandidateReport(d, p, tuple(entries), gval, gL)


# ---------------------------------------------------------------------------
# census of a coefficient space
# ---------------------------------------------------------------------------

@dataclass
class ValueRecord:
    count_reduced: int = 0
    count_nonreduced: int = 0
    witness_index: int | None = None
    witness_coeffs: tuple[int, ...] | None = None
    witness_text: str | None = None

    def to_dict(self) -> dict:
        return {"count_reduced": self.count_reduced,
                "count_nonreduced": self.count_nonreduced,
                "witness": self.witness_text}


@dataclass
class CensusReport:
    d: int
    p: int
    k: int
    reduced_only: bool
    e_cap: int
    total: int
    records: dict                 # Fraction -> ValueRecord
    unresolved: int = 0
    skipped_nonreduced: int = 0

    def reduced_values(self) -> set[Fraction]:
        return {v for v, rec in self.records.items() if rec.count_reduced}

    def all_values(self) -> set[Fraction]:
        return set(self.records)

    def counts_consistent(self) -> bool:
        s = sum(r.count_reduced + r.count_nonreduced for r in self.records.values())
        return s + self.unresolved + self.skipped_nonreduced == self.total

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "d": self.d, "p": self.p, "k": self.k,
            "reduced_only": self.reduced_only,
            "e_cap": self.e_cap,
            "total": self.total,
            "unresolved": self.unresolved,
            "skipped_nonreduced": self.skipped_nonreduced,
            "values": {str(v): rec.to_dict()
                       for v, rec in sorted(self.records.items())},
        }

    def to_csv_rows(self) -> list[list[str]]:
        rows = [["value", "count_reduced", "count_nonreduced", "witness"]]
        for v, rec in sorted(self.records.items()):
            rows.append([str(v), str(rec.count_reduced), str(rec.count_nonreduced),
                         rec.witness_text or ""])
        return rows


def _coeffs_of_index(g: int, d: int, q: int) -> list[int]:
    """The g-th projective representative (first nonzero coefficient 1), in
    lexicographic order over coefficient tuples."""
    t = 0
    block = q ** d
    while g >= block:
        g -= block
        t += 1
        block //= q
    coeffs = [0] * (d + 1)
    coeffs[t] = 1
    digits = []
    for _ in range(d - t):
        digits.append(g % q)
        g //= q
    for s, c in enumerate(reversed(digits)):
        coeffs[t + 1 + s] = c
    return coeffs


def _census_range(args) -> dict:
    (d, p, k, modulus, start, stop, reduced_only, e_cap, admissible) = args
    K = FieldSpec(p, k, modulus)
    q = K.q
    out = {
        "records": {},
        "unresolved": 0,
        "skipped": 0,
    }
    records = out["records"]
    for g in range(start, stop):
        coeffs = _coeffs_of_index(g, d, q)
        f = HomForm.from_coeffs(K, coeffs)
        reduced = is_squarefree_binary(f)
        if reduced_only and not reduced:
            out["skipped"] += 1
            continue
        res = fpt_binary_exact(f, e_cap=e_cap)
        if not res.is_exact:
            out["unresolved"] += 1
            continue
        v = res.value
        if reduced and admissible is not None and v not in admissible:
            raise AnomalyError(
                f"census d={d} p={p} k={k}: reduced form {f.as_text()} has "
                f"threshold {v} outside the admissible candidate set {sorted(admissible)}"
            )
        rec = records.get(v)
        if rec is None:
            rec = records[v] = ValueRecord()
        if reduced:
            rec.count_reduced += 1
        else:
            rec.count_nonreduced += 1
        if rec.witness_index is None or g < rec.witness_index:
            rec.witness_index = g
            rec.witness_coeffs = tuple(coeffs)
            rec.witness_text = f.as_text()
    return out


def census(d: int, p: int, k: int = 1, reduced_only: bool = False, e_cap: int = 2,
           budget: int = DEFAULT_BUDGET, workers: int = 1) -> CensusReport:
    """Enumerate every degree-d binary form over F_{p^k} up to scalar (first
    nonzero coefficient normalized to 1), compute each threshold, and
    aggregate counts with the lexicographically first witness per value.

    Reduced values are checked against the admissible candidate set on the
    fly; a violation raises AnomalyError.  Interval-only results are counted
    as unresolved.
    """
    if d < 2:
        raise ValidationError("census needs d >= 2")
    require_prime(p)
    K = FieldSpec(p, k)
    q = K.q
    total = (q ** (d + 1) - 1) // (q - 1)
    if total > budget:
        raise BudgetError(required=total, budget=budget)
    rep = candidates(d, p)
    admissible = frozenset(rep.admissible_values()) | {Fraction(2, d)}
    args = []
    nw = max(1, workers)
    step = -(-total // nw)
    for w in range(nw):
        start, stop = w * step, min((w + 1) * step, total)
        if start >= stop:
            continue
        args.append((d, p, k, K.modulus, start, stop, reduced_only, e_cap, admissible))
    if nw == 1:
        partials = [_census_range(args[0])]
    else:
        import multiprocessing as mp

        with mp.get_context("fork").Pool(nw) as pool:
            partials = pool.map(_census_range, args)
    records: dict[Fraction, ValueRecord] = {}
    unresolved = 0
    skipped = 0
    for part in partials:
        unresolved += part["unresolved"]
        skipped += part["skipped"]
        for v, rec in part["records"].items():
            cur = records.get(v)
            if cur is None:
                records[v] = rec
                continue
            cur.count_reduced += rec.count_reduced
            cur.count_nonreduced += rec.count_nonreduced
            if rec.witness_index is not None and (
                cur.witness_index is None or rec.witness_index < cur.witness_index
            ):
                cur.witness_index = rec.witness_index
                cur.witness_coeffs = rec.witness_coeffs
                cur.witness_text = rec.witness_text
    return CensusReport(d, p, k, reduced_only, e_cap, total, records,
                        unresolved, skipped)


# ---------------------------------------------------------------------------
# parametric witness search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WitnessResult:
    a_value: GFElem
    field: FieldSpec
    form: HomForm
    target: Fraction
    obstruction: str              # the gcd of the obstruction polynomials, printed

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "a": str(self.a_value),
            "field": f"F_{self.field.q}",
            "form": self.form.as_text(),
            "target": str(self.target),
            "obstruction_gcd": self.obstruction,
        }


def _target_depth(d: int, p: int, target: Fraction) -> tuple[int, int]:
    """Validate that target is a truncation of 2/d and return (N, e) in the
    reduced representation target = N/p^e."""
    lam = Fraction(2, d)
    if not 0 < target < lam:
        raise ValidationError(f"target {target} is not a positive truncation of {lam}")
    den = target.denominator
    e = 0
    while den % p == 0:
        den //= p
        e += 1
    if den != 1 or e == 0:
        raise ValidationError(f"target {target} does not have a p-power denominator")
    for L in range(1, 4 * e + 8):
        tv = trunc(lam, p, L)
        if tv.value == target:
            return target.numerator, e
        if tv.value > target:
            break
    raise ValidationError(f"target {target} is not a truncation of {lam} base {p}")


def trinomial_witness_search(p: int, d: int, target: Fraction, family: tuple[int, int, int],
                             k_max: int = 3) -> WitnessResult | None:
    """Search the one-parameter family x^i y^j (x^{2m} + a x^m y^m + y^{2m})
    for a specialization with threshold forced down to ``target``.

    The residue of f^N modulo the target Frobenius power is computed with the
    parameter left symbolic; the surviving coefficients are polynomials in a
    that must all vanish, so any witness is a root of their gcd.  Roots are
    searched in F_{p^kappa} for kappa = 1..k_max and only specializations
    that stay squarefree are accepted.  None means no witness at this scale,
    never a proof of nonexistence.
    """
    require_prime(p)
    i, j, m = family
    if i < 0 or j < 0 or m < 1 or i + j + 2 * m != d:
        raise ValidationError(f"family {family} does not have degree {d}")
    N, e = _target_depth(d, p, Fraction(target))
    base = FieldSpec(p, 1)
    a_poly = UPoly(base, (0, 1))
    one = UPoly.one(base)
    terms = {
        (i + 2 * m, j): one,
        (i + m, j + m): a_poly,
        (i, j + 2 * m): one,
    }
    fam = HomForm(base, 2, d, terms, parametric=True)
    residue = pow_mod_frobenius(fam, N, e)
    obstructions = list(residue.terms.values())
    G: UPoly | None = None
    for ob in obstructions:
        G = ob if G is None else G.gcd(ob)
    if G is not None and G.degree == 0:
        return None  # a nonzero constant obstruction: no value of a works
    for kappa in range(1, k_max + 1):
        K = FieldSpec(p, kappa)
        if G is None:
            cands = list(K.elements())
        else:
            cands = G.roots_in(K)
        for a0 in cands:
            form = fam.specialize(a0)
            if form.d != d or not is_squarefree_binary(form):
                continue
            if not in_frobenius_power(form, N, e):
                raise AnomalyError(
                    f"specialized witness at a={a0} lost the membership "
                    f"f^{N} in depth {e} it was constructed for"
                )
            # the gcd is univariate in the parameter; print it in 'a'
            gtext = "0" if G is None else str(G.monic()).replace("u", "a")
            return WitnessResult(a0, K, form, Fraction(N, p ** e), gtext)
    return None


# ---------------------------------------------------------------------------
# single-depth outside-ness predicate
# ---------------------------------------------------------------------------

def verify_genL1(p: int, d: int, i: int, j: int, g: HomForm) -> bool:
    """Check f = x^i y^j g stays outside (x^p, y^p) at exponent N, where
    2p = dN + r with 3 <= r <= d - 1.

    Hypotheses enforced: 0 <= i, j < p/N, the total degree is d, g is not
    divisible by x or y, and i + j is d-2 or d-1 (the printed source range
    "d-1 <= i+j <= d-2" is inconsistent as stated; the proof uses g of
    degree one or two, which is what is accepted here).
    """
    require_prime(p)
    if d < 4:
        raise ValidationError("need d >= 4")
    N, r = divmod(2 * p, d)
    if not 3 <= r <= d - 1:
        raise ValidationError(f"2p = {d}*{N} + {r}: remainder {r} outside [3, {d - 1}]")
    if i < 0 or j < 0 or (N > 0 and not (i < Fraction(p, N) and j < Fraction(p, N))):
        raise ValidationError(f"need 0 <= i, j < p/N = {p}/{N}")
    if i + j not in (d - 2, d - 1):
        raise ValidationError(f"i + j = {i + j} must be d-2 or d-1")
    if g.n != 2 or g.parametric:
        raise ValidationError("g must be a concrete binary form")
    if g.d != d - i - j:
        raise ValidationError(f"deg g = {g.d} but x^{i} y^{j} g must have degree {d}")
    if not g.coeff((g.d, 0)) or not g.coeff((0, g.d)):
        raise ValidationError("g must not be divisible by x or y")
    terms = {(ax + i, ay + j): c for (ax, ay), c in g.terms.items()}
    f = HomForm(g.field, 2, d, terms)
    return not in_frobenius_power(f, N, 1)


# ---------------------------------------------------------------------------
# lower bounds and their sharpness witnesses
# ---------------------------------------------------------------------------

def lower_bound_reduced(d: int, p: int) -> Fraction:
    """First nonzero truncation of the possibly-terminating base-p expansion
    of 2/d: a lower bound for the threshold of any reduced form of degree d."""
    if d < 2:
        raise ValidationError("need d >= 2")
    require_prime(p)
    lam = Fraction(2, d)
    e = 1
    while True:
        tv = trunc(lam, p, e, terminating=True)
        if tv.numer:
            return tv.value
        e += 1


def sharp_witness(d: int, p: int, e: int, k_max: int = 2, trials: int = 600,
                  seed: int = 0) -> HomForm:
    """A reduced degree-d witness with threshold exactly 1/p^e, for
    p^e + 1 <= d <= 2 p^e.

    Every form supported away from the exponent window (d - p^e, p^e) lies in
    the e-th Frobenius power, which caps its threshold at 1/p^e; the reduced
    lower bound meets that cap in this degree range, so any squarefree member
    of the family is a sharp witness.  The search is deterministic-seeded and
    raises if nothing is found through F_{p^k_max}.
    """
    require_prime(p)
    B = p ** e
    if not B + 1 <= d <= 2 * B:
        raise ValidationError(f"need p^e + 1 <= d <= 2 p^e, got d={d}, p^e={B}")
    if lower_bound_reduced(d, p) != Fraction(1, B):
        raise AnomalyError(f"lower bound at d={d}, p={p} is not 1/p^{e}")
    allowed = [idx for idx in range(d + 1)
               if d - idx >= B or idx >= B]  # x-exp = d - idx, y-exp = idx
    rng = random.Random(seed)
    for kappa in range(1, k_max + 1):
        K = FieldSpec(p, kappa)
        fixed: list[list[int]] = []
        # a few structured guesses first, then random draws on the support
        g1 = [0] * (d + 1)
        g1[0] = g1[d] = 1
        if B <= d:
            g1[B] = 1
        fixed.append(g1)
        g2 = list(g1)
        g2[d - B] = 1
        fixed.append(g2)
        for coeffs in fixed:
            f = HomForm.from_coeffs(K, coeffs)
            if is_squarefree_binary(f) and in_frobenius_power(f, 1, e):
                return f
        for _ in range(trials):
            coeffs = [0] * (d + 1)
            for idx in allowed:
                coeffs[idx] = rng.randrange(K.q)
            if not any(coeffs):
                continue
            f = HomForm.from_coeffs(K, coeffs)
            if is_squarefree_binary(f) and in_frobenius_power(f, 1, e):
                return f
    raise ValidationError(
        f"no reduced witness with threshold 1/{B} found for d={d} through F_{p}^{k_max}"
    )
