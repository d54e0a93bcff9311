"""Seeded verification suites and their deterministic reports.

Every suite draws its trials from a per-trial PRNG seeded by (seed, index),
so a report is a pure function of its TrialConfig: rerunning one gives
byte-identical text and JSON.  A failing suite embeds enough data in each
violation to rebuild the offending instance.
"""

import json

from jspec import (
    Automorphism,
    FieldContext,
    Matrix,
    TrialConfig,
    check_map_preservation,
    check_pair_equivalences,
    check_two_projection_sum_identity,
    make_induced,
    map_from_json,
    pencil_poly,
    tuple_from_json,
    zero_set_equal,
)

K = FieldContext(2)

print("a passing suite and its report:")
report = check_pair_equivalences(TrialConfig(n=3, k=2, trials=40, seed=3))
print(report.render())

print("\nreports are deterministic:")
again = check_pair_equivalences(TrialConfig(n=3, k=2, trials=40, seed=3))
same_json = (json.dumps(report.to_json(), sort_keys=True)
             == json.dumps(again.to_json(), sort_keys=True))
print(f"  identical text: {report.render() == again.render()}")
print(f"  identical JSON: {same_json}")

print("\nthe exact two-projection identity, 30 seeded instances:")
identity = check_two_projection_sum_identity(
    TrialConfig(n=3, trials=30, seed=5))
print(f"  {identity.summary()}, counters: {identity.counters}")

print("\na suite that finds real violations (flip on triples):")
flip = make_induced(Automorphism.FLIP, Matrix.identity(3, K))
broken = check_map_preservation(flip, TrialConfig(n=3, k=3, trials=30,
                                                  seed=5))
print(f"  {broken.summary()}, counters: {broken.counters}")

violation = broken.violations[0]
payload = violation.data["witness"]
print(f"\nfirst violation (trial {violation.index}) is replayable "
      "from its payload:")
projs = tuple_from_json(payload["tuple"], K)
m = map_from_json(payload["map"], K)
before = pencil_poly(projs)
after = pencil_poly([m.apply(p) for p in projs])
print(f"  rebuilt tuple ranks: {[p.rank for p in projs]}")
print(f"  zero sets still differ: {not zero_set_equal(before, after)}")
