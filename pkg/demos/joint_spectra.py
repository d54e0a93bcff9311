"""Joint spectra of projection tuples.

The joint spectrum of (P1, ..., Pk) is the zero set of
det(c1*P1 + ... + ck*Pk), a homogeneous polynomial in the ck.  This script
computes a few pencils, tests point membership, and shows the rank-one
dichotomy: an n-tuple of lines either has spectrum exactly the union of
coordinate hyperplanes or all of K^k.
"""

from jspec import (
    FieldContext,
    classify_rank_one_tuple,
    format_poly,
    pair_facts,
    pencil_poly,
    rank_one,
)

K = FieldContext(2)
r = K.sqrt_d

print("the standard basis triple in K^3:")
basis = [rank_one((1, 0, 0), K), rank_one((0, 1, 0), K),
         rank_one((0, 0, 1), K)]
spec = pencil_poly(basis)
print(f"  pencil: {format_poly(spec.pencil)}")
print(f"  class:  {classify_rank_one_tuple(basis).value}")

print("\nmembership is an exact evaluation:")
for point in ("1,1,1", "0,1,r", "1+i,1,0"):
    coords = [K.parse(t) for t in point.split(",")]
    verdict = "in" if spec.member(coords) else "not in"
    print(f"  ({point})  {verdict} the spectrum")

print("\ntilting a line keeps the dichotomy, squashing breaks into fullness:")
tilted = [rank_one((1, r, 0), K), rank_one((0, 1, 0), K),
          rank_one((0, 0, 1), K)]
coplanar = [rank_one((1, 0, 0), K), rank_one((0, 1, 0), K),
            rank_one((1, 1, 0), K)]
print(f"  spanning lines (1,r,0), e2, e3:  "
      f"{classify_rank_one_tuple(tilted).value}, pencil "
      f"{format_poly(pencil_poly(tilted).pencil)}")
print(f"  coplanar lines e1, e2, (1,1,0):  "
      f"{classify_rank_one_tuple(coplanar).value}, pencil vanishes: "
      f"{pencil_poly(coplanar).is_full()}")

print("\nfor a pair, lattice facts are spectrum facts:")
plane12 = rank_one((1, 0, 0), K).join(rank_one((0, 1, 0), K))
plane23 = rank_one((0, 1, 0), K).join(rank_one((0, 0, 1), K))
off_line = rank_one((0, r, 1), K)
for label, p, q in (("two planes sharing the e2 line", plane12, plane23),
                    ("a plane and a transverse line", plane12, off_line)):
    spectrum = pencil_poly([p, q])
    facts = pair_facts(p, q)
    print(f"  {label}:")
    print(f"    pencil: {format_poly(spectrum.pencil)}")
    print(f"    P v Q = I: {facts.join_full},  (1,1) off the spectrum: "
          f"{facts.point11_out}")
    print(f"    P ^ Q = 0: {facts.meet_zero},  (1,-1) also off: "
          f"{facts.point1m1_out}")
print("  (join full <-> (1,1) missing; join full and meet zero <-> "
      "both points missing)")
