"""The shipped ring zoo: the five scenarios the acceptance checks run over."""

from __future__ import annotations

from chaingeom.rings import Ring, RingSpec, Subfield, build_ring, build_subfield

ZOO: list[tuple[RingSpec, str]] = [
    (RingSpec("finite-field", 4), "prime"),
    (RingSpec("dual-numbers", 2), "scalar"),
    (RingSpec("product", 2), "diagonal"),
    (RingSpec("matrix2", 2), "singer"),
    (RingSpec("matrix2", 3), "singer"),
]


def zoo_scenarios() -> list[tuple[Ring, Subfield]]:
    out = []
    for spec, descriptor in ZOO:
        ring = build_ring(spec)
        out.append((ring, build_subfield(ring, descriptor)))
    return out
