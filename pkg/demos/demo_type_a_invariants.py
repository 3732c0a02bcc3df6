"""The type A integer invariants: pole counts, alternating sums, E-vectors.

Everything is read off the denominator exponent lists.  The alternating sums
recover the degree invariants, whose symmetrized value counts poles; the
E-vectors realize the cuspidal classes as root vectors under the pairing
(E, E') = -Lambda_inf.
"""

from iboxes.invariants import (
    FundIndex,
    bilinear,
    de_fund,
    denom_exponents,
    dual_shift,
    e_vector,
    eb_check,
    fundamental_of,
    lambda_fund,
    lambda_inf_fund,
    root_module_check,
)
from iboxes.chains import expand_code
from iboxes.roots import beta_sequence
from iboxes.sequences import staircase_sequence

n = 3
print("denominator exponents for n=3:")
for i in range(1, 4):
    for j in range(i, 4):
        print(f"    d_{i}{j} vanishes at (-q)^e for e in {denom_exponents(n, i, j)}")

x, y = FundIndex(1, 0), FundIndex(1, 2)
print(f"\nde({x}, {y}) = {de_fund(n, x, y)}")
print(f"Lambda({x}, {y}) = {lambda_fund(n, x, y)},  Lambda({y}, {x}) = {lambda_fund(n, y, x)}")
print(f"Lambda_inf(x, x) = {lambda_inf_fund(n, x, x)} for every fundamental x")
print("dual of (1,0):", dual_shift(n, x, 1))
print("all fundamentals are root modules:", all(root_module_check(n, FundIndex(i, i % 2)) for i in range(1, 4)))

seq = staircase_sequence("A3")
betas = beta_sequence(seq.datum.diagram, seq.period_i)
print("\nGram matrix of E-vectors along one period (equals the root Gram matrix):")
for j in range(1, 7):
    row = [
        bilinear(
            e_vector(n, [fundamental_of(seq, j)]),
            e_vector(n, [fundamental_of(seq, k)]),
        )
        for k in range(1, 7)
    ]
    print("   ", row, "  beta =", betas[j - 1])

chain = expand_code(seq, 0, ("L", "L", "R", "L"))
print("\nE . B = 0 for the chain", chain.pretty(), "->", eb_check(seq, chain))
