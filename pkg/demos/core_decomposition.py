"""
Reducing a left symplectic algebra to its core
==============================================

A left symplectic algebra (A, omega) carries a canonical ideal
I = span(x * y).  Its omega-orthogonal complement contains I, the
quotient I_perp / I inherits a nondegenerate form, and the induced
product on the quotient is zero.  core() computes all of that exactly
and verify_core_properties() re-checks every claimed property.
"""

from sympleib import Algebra, core, form_from_pairs, verify_core_properties

# A four-dimensional left symplectic algebra with one-dimensional core
# ideal: all products land on e4.
a = Algebra.from_table(
    4,
    {
        (1, 1): {4: 1},
        (1, 2): {4: 1},
        (2, 1): {4: -1},
    },
)
form = form_from_pairs(4, {(1, 4): 1, (2, 3): 1})

dec = core(a, form)

print("ideal dimension   :", dec.ideal.dim)
print("perp dimension    :", dec.ideal_perp.dim)
print("reduced dimension :", dec.reduced.algebra.dim)
print("h dimension       :", dec.h_dim)

# The reduced algebra is abelian with a nondegenerate form.
reduced = dec.reduced
print("reduced products all zero:", all(
    all(v == 0 for v in reduced.algebra.c[i][j])
    for i in range(reduced.algebra.dim)
    for j in range(reduced.algebra.dim)
))
print("reduced form nondegenerate:", reduced.form.nondegenerate)

# reduced_lift maps reduced basis vectors back into the big algebra.
for i in range(dec.reduced_lift.rows):
    print("  lift of reduced e%d:" % (i + 1),
          tuple(str(v) for v in dec.reduced_lift.row(i)))

report = verify_core_properties(a, form, dec)
print()
for check in report.checks:
    print(check.line())
print("all properties hold:", report.ok)

# core() refuses input that is not left symplectic.
bad_form = form_from_pairs(4, {(1, 2): 1, (3, 4): 1})
try:
    core(a, bad_form)
except ValueError as exc:
    print()
    print("rejected:", exc)
