"""Exact normal ordering in the twisted polynomial algebra.

Walks through the commutation rules on small inputs, the hand-checked
degree-four example, and the sphere quotient where the defining relation
collapses to the identity.
"""

from qball import AlgebraContext, SPHERE, normalize, parse_expression, print_poly

ball = AlgebraContext(1)

print("== ball algebra, one generator ==")
for text in ["z1'*z1", "z1'*z1*z1'*z1"]:
    nf = normalize(parse_expression(text, 1), ball)
    print(f"  {text:18} ->  {print_poly(nf)}")

print()
print("== two generators: stars move right, blocks sort ascending ==")
ball2 = AlgebraContext(2)
for text in ["z2*z1", "z1'*z2", "z2'*z1*z2"]:
    nf = normalize(parse_expression(text, 2), ball2)
    print(f"  {text:18} ->  {print_poly(nf)}")

print()
print("== sphere quotient: one z1/z1' pair is eliminated ==")
sphere = AlgebraContext(1, SPHERE)
sphere2 = AlgebraContext(2, SPHERE)
print("  z1*z1'  (n=1)    -> ", print_poly(normalize(parse_expression("z1*z1'", 1), sphere)))
print("  z1'*z1  (n=1)    -> ", print_poly(normalize(parse_expression("z1'*z1", 1), sphere)))
relation = "1 - z1*z1' - z2*z2'"
print(f"  {relation} (n=2) -> ",
      print_poly(normalize(parse_expression(relation, 2), sphere2)))
