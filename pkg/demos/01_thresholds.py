"""Computing F-pure thresholds of explicit polynomials.

The F-pure threshold of a form f over a field of characteristic p measures
how singular the hypersurface f = 0 is: it is the supremum of N/p^e over all
pairs with f^N outside the Frobenius power (x^{p^e}, y^{p^e}, ...).  Smaller
values mean worse singularities.  This script walks through the engine's
different resolution paths on concrete inputs.
"""

from fptlib import FieldSpec, fpt_binary_exact, fpt_general, parse_form

# -- monomials have a closed-form threshold: min over 1/exponent ------------
K3 = FieldSpec(3)
print("monomial rule:")
for text in ["x^2*y^3", "x*y", "x^7"]:
    f = parse_form(text, K3, n=2)
    print(f"  fpt({text}) over F_3 = {fpt_binary_exact(f).describe()}")

# -- squarefree binary forms are resolved completely -------------------------
print("\nsquarefree binary forms:")
K7 = FieldSpec(7)
for p, text in [(7, "x^5+y^5"), (5, "x*y*(x+y)"), (3, "x*y*(x^2+y^2)")]:
    f = parse_form(text, FieldSpec(p))
    res = fpt_binary_exact(f)
    print(f"  fpt({text}) over F_{p} = {res.describe()}")
    for c in res.certificates:
        verdict = "inside" if c.member else "outside"
        print(f"      certificate: f^{c.N} is {verdict} depth {c.e}")

# -- perfect powers divide the threshold of their base ------------------------
print("\npower rule:")
f = parse_form("(x^5+y^5)^2", K7)
print(f"  fpt((x^5+y^5)^2) over F_7 = {fpt_binary_exact(f).describe()}")

# -- anything else gets a certified interval ---------------------------------
print("\ncertified intervals:")
f = parse_form("x*(x^6+x^3*y^3+y^6)", K3)   # = x*(x+2y)^6 over F_3
res = fpt_binary_exact(f, e_cap=6)
print(f"  fpt(x*(x^6+x^3*y^3+y^6)) over F_3 is in {res.describe()}")
print("  (this septic degenerates to x*(x+2y)^6 in characteristic 3, so its")
print("   true threshold is 1/6 = fpt of x*y^6, inside the interval above)")

# -- more variables: monomials, powers, intervals ------------------------------
print("\nthree variables:")
K5 = FieldSpec(5)
for text in ["x1*x2*x3", "(x1^2+x2*x3)^2", "x1^3+x2^3+x3^3"]:
    res = fpt_general(parse_form(text, K5), e_cap=3)
    print(f"  fpt({text}) over F_5: {res.describe()}")
