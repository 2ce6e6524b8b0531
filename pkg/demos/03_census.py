"""Stratifying whole coefficient spaces by threshold.

Candidate filters first: writing 2/d = a/b in lowest terms, a truncation
place L must pass three arithmetic conditions, avoid the excluded interval
(1/p, 1/(p-1)), and stay below the generic maximum.  The census then
enumerates every form (one representative per scalar class), computes each
threshold exactly, and checks the observed values against the candidates.
"""

from fptlib import candidates, census

# -- candidate tables -------------------------------------------------------
print("candidate truncations for quintics over F_7:")
rep = candidates(5, 7)
for e in rep.entries:
    flags = f"I={e.cond_I} II={e.cond_II} III={e.cond_III} excl={e.bms_excluded}"
    print(f"  L={e.L}: {str(e.value):>9}  {flags} -> "
          f"{'admissible' if e.admissible else 'inadmissible'}")
print(f"  generic value: {rep.generic_value} at L={rep.generic_L}")

# -- the famous near-miss: all three conditions can hold and still fail ------
print("\nnecessity is not sufficiency (d=19, p=11):")
rep = candidates(19, 11)
e2 = next(e for e in rep.entries if e.L == 2)
print(f"  L=2 value {e2.value}: conditions {e2.cond_I, e2.cond_II, e2.cond_III},"
      f" excluded interval hit: {e2.bms_excluded} -> admissible: {e2.admissible}")

# -- exhaustive censuses ------------------------------------------------------
print("\ncensus of quartics over F_3 (121 forms):")
rep = census(4, 3, 1)
for v, rec in sorted(rep.records.items()):
    print(f"  {str(v):>5}: reduced {rec.count_reduced:>3}, other "
          f"{rec.count_nonreduced:>3}, witness {rec.witness_text}")
print(f"  unresolved intervals: {rep.unresolved}")

print("\ncensus of quintics over F_7 (19608 forms), reduced strata:")
rep = census(5, 7, 1, reduced_only=True)
for v, rec in sorted(rep.records.items()):
    print(f"  {str(v):>8}: {rec.count_reduced:>6} forms, first witness "
          f"{rec.witness_text}")

print("\nprime-power degrees collapse to a single reduced value:")
for d, p in [(9, 3), (6, 3), (4, 2)]:
    rep = census(d, p, 1, reduced_only=True)
    print(f"  d={d}, p={p}: reduced values {sorted(map(str, rep.reduced_values()))}")
