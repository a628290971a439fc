# Rational generating functions, their power series, and closed forms.
from communal import (build_gf, closed_form_andrews, closed_form_half_half_n, count,
                      gf_equal, parse_alpha, series, validate_alpha)

candy = parse_alpha("1/3,2/5,2/7")
gf = build_gf(candy)
print("F(x) =", gf)
coeffs = series(gf, 103)
print("x^97..x^103:", coeffs[97:])
assert coeffs == [count(candy, g) for g in range(104)]

# Integer-sided triangles with a fixed perimeter, and the k-part analogue.
for k in (3, 4):
    sys_ = validate_alpha([(1, k - 1)] * k)
    built = build_gf(sys_)
    print(f"k={k}: {sum(c for _, c in built.numerator)} base tuples,",
          "matches closed form:", gf_equal(built, closed_form_andrews(k)))

for n in range(2, 7):
    sys_ = validate_alpha([(1, 2), (1, 2), (1, n)])
    print(f"(1/2,1/2,1/{n}):", closed_form_half_half_n(n),
          gf_equal(build_gf(sys_), closed_form_half_half_n(n)))
