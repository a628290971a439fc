# f(g) is a polynomial in g on each residue class mod lcm(denominators).
from communal import count, extract_quasipoly, parse_alpha
from communal.quasipoly import render_poly

triangles = parse_alpha("1/2,1/2,1/2")
qp = extract_quasipoly(triangles)
for r, poly in enumerate(qp.polys):
    print(f"g = {r} mod {qp.period}, g >= {qp.starts[r]}:  f(g) = {render_poly(poly)}")
print([qp(g) for g in range(3, 20)])
print([count(triangles, g) for g in range(3, 20)])

ex = parse_alpha("1/2,1/3,1/5")
qp = extract_quasipoly(ex)
print(f"(1/2,1/3,1/5): period {qp.period}; f(1000) = {qp(1000)} = {count(ex, 1000)}")
