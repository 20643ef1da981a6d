# Diagonals c_{m,m-j}: recover the bracket polynomial for each j by exact
# interpolation and compare with the published forms for j = 0..7.
from psisum import build_C_recurrence, check_conjecture, fact4_fixtures, fit_pattern

table = build_C_recurrence(60)

for p in fact4_fixtures():
    fitted = fit_pattern(p.k, p.parity, table)
    print(p.offset, fitted == p, fitted)

# go further than the published range
report = check_conjecture(k_max=10, m_max=60, table=table)
print("all claims hold:", report.ok, f"({len(report.records)} records)")
print("j = 20 bracket leading coefficient:", report.polynomials[10, "even"].leading)
