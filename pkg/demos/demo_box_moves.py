"""Walk through the rank-3 worked example of chains and box moves.

The ambient sequence has colors (3,2,3,1,2,3) on the indices -2..3.  We grow
a chain of three i-boxes from the point 0, then replay the walk through the
four admissible chains with range [-2,0], watching each move act either as a
transposition or as a T-system exchange.
"""

from iboxes.chains import box_move, classify_move, expand_code, frozen_indices, movable_positions, t_path
from iboxes.qdata import QDatum
from iboxes.roots import folded_datum
from iboxes.sequences import from_q_datum
from iboxes.tsystems import t_relation

seq = from_q_datum(QDatum(folded_datum("A3"), {1: 0, 2: 1, 3: 2}), (1, 2, 3, 1, 2, 1))
print("colors on -2..3:", seq.colors(-2, 3))

chain = expand_code(seq, 0, ("L", "L"))
print("\nstart at (0, LL):", chain.pretty())
print("frozen positions:", sorted(frozen_indices(chain)))
print("movable:", [(s, m.kind) for s, m in movable_positions(chain)])

for step in (1, 2, 1):
    move = classify_move(chain, step)
    if move.is_tsystem:
        print(f"\nmove {step} is a T-system on {move.ibox}:")
        print("   ", t_relation(seq, move.ibox))
    else:
        print(f"\nmove {step} transposes two boxes:")
    chain = box_move(chain, step)
    print(f"    ({chain.base}, {''.join(chain.code)}) =", chain.pretty())

target = expand_code(seq, 0, ("L", "L"))
print("\npath back to the start:", t_path(chain, target))
