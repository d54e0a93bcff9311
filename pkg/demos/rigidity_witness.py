"""Hunting for tuples whose spectrum a map fails to preserve.

Pair spectra are preserved by every map family here, so any failure needs
at least a triple.  The searcher tries a small structured family first,
then seeded random tuples; for the sqrt(d) flip the structured family
already works, while unitary conjugation survives any budget.
"""

from jspec import (
    Automorphism,
    FieldContext,
    Matrix,
    TrialConfig,
    find_spectrum_witness,
    format_poly,
    make_induced,
    make_unitary_conj,
)

K = FieldContext(2)

flip = make_induced(Automorphism.FLIP, Matrix.identity(3, K))
cfg = TrialConfig(n=3, k=3, seed=7)

print("flip witness among mixed-rank triples (structured family, "
      "no random draws):")
w = find_spectrum_witness(flip, cfg, budget=0)
print(f"  ranks: {[p.rank for p in w.projs]}")
print(f"  pencil of the triple: {format_poly(w.original.sf())}")
print(f"  pencil of its image:  {format_poly(w.image.sf())}")

print("\nthe same map on rank-one tuples needs length n+1 = 4:")
short = TrialConfig(n=3, k=3, seed=7)
print(f"  k=3 rank-one search, budget 400: "
      f"{find_spectrum_witness(flip, short, budget=400, rank_one_only=True)}")
long_cfg = TrialConfig(n=3, k=4, seed=7)
w4 = find_spectrum_witness(flip, long_cfg, budget=400, rank_one_only=True)
print(f"  k=4 rank-one search, budget 400: found, ranks "
      f"{[p.rank for p in w4.projs]}")
print(f"  pencil of the 4-tuple: {format_poly(w4.original.sf())}")
print(f"  pencil of its image:   {format_poly(w4.image.sf())}")

print("\nunitary conjugation never yields a witness:")
u = Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]], K)
unitary = make_unitary_conj(u)
for k in (3, 4):
    found = find_spectrum_witness(unitary, TrialConfig(n=3, k=k, seed=7),
                                  budget=150)
    print(f"  k={k}, 150 random tuples: {found}")

print("\nfull witness report for the flip triple:")
print(w.render())
