"""From a chain to a cluster seed, and a box move realized as a mutation.

The seed of the all-L chain on a window puts one fresh variable on every box
[s, b}.  Transporting it to another chain mutates at every T-system move, so
the transported variables are Laurent polynomials in the initial ones; the
exchange relation at each mutation is exactly the boxes' T-system identity.
"""

from iboxes.chains import expand_code
from iboxes.cluster import mutate_seed
from iboxes.sequences import staircase_sequence
from iboxes.tsystems import canonical_box_seed, seed_from_chain, verify_box_move_mutation

seq = staircase_sequence("A3")

base = canonical_box_seed(seq, -2, 0)
names = base.variable_names()
print("canonical chain:", base.chain.pretty())
print("exchangeable boxes:", [str(b) for b in base.seed.exchangeable])
for box in base.boxes:
    print(f"    x{box} = {base.format_variable(box)}   [{base.labels()[box]}]")

print("\none mutation at the box [0]:")
mutated = mutate_seed(base.seed, base.boxes[0])
print(f"    x'[0] = {mutated.variables[base.boxes[0]].format(names)}")

chain = expand_code(seq, -1, ("L", "R"))
bs = seed_from_chain(seq, chain)
print(f"\nseed transported to ({chain.base}, {''.join(chain.code)}):")
for box in bs.boxes:
    print(f"    x{box} = {bs.format_variable(box)}")

print("\nmove-by-move verification on the middle chain:")
mid = expand_code(seq, -1, ("R", "L"))
print(verify_box_move_mutation(seq, mid, 2))
