"""Run the decision ladder on a handful of algebras and re-check each verdict."""

import json

from radzero import AlgebraSpec, decide, decide_scaled, verify_verdict

cases = {
    "dual numbers, n=6": AlgebraSpec.from_pattern([6], [[1]]),
    "full 2x2, blocks 6": AlgebraSpec.from_pattern([6, 6], [[1, 1], [1, 1]]),
    "basic star, a=4": AlgebraSpec.from_pattern([1] * 4, [[1, 1, 1, 1]] + [[0] * 4] * 3),
    "basic tree, a<=3": AlgebraSpec.from_pattern([1] * 3, [[1, 1, 1], [0] * 3, [0] * 3]),
    "small blocks, open": AlgebraSpec.from_pattern([1, 2, 1, 1], [[1, 0, 0, 0]] * 4),
}

for label, spec in cases.items():
    v = decide(spec)
    print(f"{label:20s} {v.status.value:9s} {v.certificate.kind:22s} verified={verify_verdict(spec, v)}")

# the open case is settled once every block is blown up to size 6
spec = cases["small blocks, open"]
print(json.dumps(decide_scaled(spec, 6).to_json()))
