# Coefficient tables: a_ml (psi_m in powers of n) and c_mk (n^m in the psi basis).
from psisum import build_A, build_C_binomial, build_C_invert_A, build_C_recurrence

A = build_A(6)  # built from one Stirling formula, checked against two others
for m in range(2, 7):
    print(m, [str(x) for x in A.row(m)])

# three independent constructions of the c triangle
C = build_C_recurrence(10)
assert C == build_C_invert_A(10) == build_C_binomial(10)
for m in range(2, 11):
    print(m, C.row(m))

print("row sums:", [sum(C.row(m)) for m in range(2, 11)])  # all 1
print("diagonal:", [C[m, m] for m in range(2, 11)])        # (m-2)!
print("first 12 b-file terms:", C.flat()[:12])
