"""From an affine null curve to the quadric and back to a contact curve."""
from kleincurves import (
    RatFunction,
    UniPoly,
    complete_null,
    first_ramification_divisor,
    klein_forward,
    klein_inverse,
    model_change,
    recover_beta,
)
from kleincurves.field import I

z = UniPoly.z()
third = UniPoly(["1/3"])

enneper = [
    RatFunction(z - third * z**3),
    RatFunction(UniPoly([I]) * (z + third * z**3)),
    RatFunction(z**2),
]

g = complete_null(enneper)
print("Enneper curve in the standard quadric:")
print("  ", g.curve)
print("   degree", g.degree, "branch divisor", first_ramification_divisor(g.curve))

f = klein_inverse(g)
beta = recover_beta(f)
print("its contact curve:")
print("  ", f)
print("   degree", f.degree, "contact form", beta)

# going forward again lands in the W-model of beta; changing the model
# gives a curve projectively equivalent to the one we started from
back = model_change(klein_forward(f, beta))
print("forward image, standard model:")
print("  ", back.curve)
print("   degree", back.degree)

# a curve with two simple poles
poles = RatFunction(1, z) + RatFunction(2, z - 1)
h = complete_null([poles, poles * RatFunction(UniPoly([I])), RatFunction(3)])
print("two simple poles give degree", h.degree)
