# Iterated power sums S_m^(a)(n) by every route, checked against brute force.
from psisum import Evaluator, hypersum_oracle

ev = Evaluator(8)

# a = 1 is the ordinary power sum 1^m + ... + n^m
print(ev.evaluate_all(3, 1, 4))   # every method gives 100

# a = 3 nests the summation three times
for n in range(1, 6):
    print(n, hypersum_oracle(2, 3, n), ev.evaluate(2, 3, n, "psi"))

# a whole row, all methods at once
vals = {n: ev.evaluate_all(6, 2, n) for n in range(1, 8)}
for n, v in vals.items():
    assert len(set(v.values())) == 1
    print(n, v["oracle"])
