"""
Schubert calculus on G(2,5)
===========================

Excess intersection bookkeeping for the incidence variety of lines.
"""
from dworklines.schubert import sigma, integrate, incidence_decomposition

s1 = sigma(1)
print("sigma1^4 =", s1 ** 4)
print("sigma1^6 =", s1 ** 6, "-> degree", integrate(s1 ** 6))

table = incidence_decomposition()
for name, cls in table.classes.items():
    print(f"[{name}] = {cls}")
print("degree in the Pluecker embedding:", table.degrees["plucker"])
print("degree of the threefold:", table.degrees["threefold"])
