# Splitting 100 pieces of candy among three children, where the children may
# receive at most 1/3, 2/5 and 2/7 of the total respectively.
from communal import count, enumerate_bijective, parse_alpha, slack

candy = parse_alpha("1/3,2/5,2/7")
print("bounds:", candy, " N =", candy.N, " A =", candy.A)

# The count only depends on how far the floor bounds overshoot the total.
for g in (99, 100, 101):
    s = slack(candy, g).s_g
    print(f"g={g}: slack {s}, {count(candy, g)} ways")

for c in enumerate_bijective(candy, 100):
    print("  ", list(c))

# Small totals can have no valid split at all.
print("g=1..14:", [count(candy, g) for g in range(1, 15)])
