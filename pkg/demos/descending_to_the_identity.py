"""Walking down the Bruhat order from the permutation 3,1,5,2,7,4,... to the identity.

The start moves every odd number up by two and every even number down by
two, so it differs from the identity at every position. No finite chain of
transpositions reaches the identity, but each segment of going-down steps
pins one more position, and the chain converges position by position.
"""

from bruhatkit import IDENTITY, Permutation, chain_toward, converges_prefix

rho = Permutation.paper_rho()
print("start :", rho.one_line(12), "...")

chain = chain_toward(IDENTITY, rho, max_steps=40)
for k, step in enumerate(chain.steps[:8], start=1):
    print(f"step {k:2d}: swap positions ({step.p}, {step.q}) -> {step.result.one_line(12)} ...")

print(f"\nafter {len(chain.steps)} steps the chain has not terminated: {not chain.terminated}")
print(f"comparisons were verified on positions up to {chain.bound_limited}")

# where does each prefix stop moving?
for m in (1, 5, 10):
    n = converges_prefix(chain.results, IDENTITY, m)
    print(f"positions 1..{m} agree with the identity from chain element {n} on")
