"""
The perfect square behind the fiber surfaces
============================================

Build P from the signed products delta(u^{0i}) and check that
prod_j g(u^j) - 3/4 delta^2 is exactly P^2.
"""
from dworklines.identities import construct_and_verify_P
from dworklines.identities import U
from dworklines.polyring import vandermonde_delta

P, cases = construct_and_verify_P()
print("P: degree", P.total_degree(), "with", len(P), "terms")

for case in cases:
    print(f"{case.name:28s} {'ok' if case.verified else 'FAILED'}")

# delta is the Vandermonde in u0..u4, degree 10 like P
delta = vandermonde_delta(U)
print("delta:", delta.total_degree(), "/", len(delta), "terms")
