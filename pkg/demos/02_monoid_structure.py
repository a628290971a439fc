# Every valid split is a base tuple plus a nonnegative combination of k
# generator tuples.
from communal import base_set, decompose, enumerate_bijective, generators, parse_alpha, recompose

candy = parse_alpha("1/3,2/5,2/7")

for i, x in enumerate(generators(candy), 1):
    print(f"x{i} = {list(x)}  (total {x.total})")

for e in base_set(candy):
    print(f"residues {e.a} -> base {list(e.b)}, weight {e.weight}")

for c in enumerate_bijective(candy, 100):
    d = decompose(candy, c)
    print(f"{list(c)} = {list(d.base.b)} + {d.coeffs} . x")
    assert recompose(candy, d) == c

# Sums of valid splits stay valid.
a, b = enumerate_bijective(candy, 100)[:2]
print(list(a + b), "is a valid split of", (a + b).total)
