"""
Checking Leibniz identities with exact witnesses
================================================

Every identity check in sympleib returns a report: either the identity
holds on all basis triples, or the report carries a witness naming the
first triple where it breaks, together with the exact defect vector.
"""

from fractions import Fraction

from sympleib import (
    Algebra,
    is_left_leibniz,
    is_lie,
    is_right_leibniz,
    is_symmetric_leibniz,
)

# A four-dimensional algebra whose only nonzero products land in the
# span of e3 and e4.  Products are given sparsely, 1-based.
a = Algebra.from_table(
    4,
    {
        (1, 1): {3: 1},
        (1, 2): {4: 1},
        (2, 1): {4: 1},
        (2, 2): {3: Fraction(1, 2)},
    },
)

for check in (is_left_leibniz, is_right_leibniz, is_symmetric_leibniz, is_lie):
    report = check(a)
    print(f"{report.name:<18} holds={report.holds}")
    if report.witness is not None:
        # witness indices are 0-based basis positions
        w = report.witness
        defect = tuple(str(v) for v in w.defect)
        print(f"    {w.kind} fails at {w.indices}, defect {defect}")

# The algebra above is symmetric Leibniz but not Lie: the witness shows
# exactly which basis pair breaks antisymmetry and by how much.

# Left Leibniz without right Leibniz is also easy to exhibit.
b = Algebra.from_table(3, {(1, 1): {2: 1}, (1, 2): {3: 1}})
print()
print("left :", is_left_leibniz(b).holds)
print("right:", is_right_leibniz(b).holds)
w = is_right_leibniz(b).witness
print("right witness:", w.kind, "at", w.indices)
