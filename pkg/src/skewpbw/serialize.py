"""JSON documents for presentations, q-matrices and elements.

Presentation document::

    {"ring": {"kind": "polynomial", "variables": ["t"]},
     "n": 1,
     "sigma": ["identity"],
     "delta": [{"images": {"t": "1"}}],
     "c": [],
     "tails": {},
     "flags": {"quasi_commutative": false, "bijective": true}}

``c`` holds the upper triangle row by row (row ``i`` lists
``c_{i,i+1} .. c_{i,n}``), ``tails`` maps ``"i,j"`` to ``{"0": d0, "k": dk}``.
All indices in files are 1-based and every coefficient is a string.
"""

from __future__ import annotations

import json
from pathlib import Path

from .coeffring import CoeffRing, DerivSpec, EndoSpec, ring_from_spec, ring_to_spec
from .pbwcore import Element, Presentation
from .quantum import QMatrix


def _endo_to_json(s: EndoSpec):
    if s.is_identity:
        return "identity"
    out = {"images": {k: str(v) for k, v in s.images}}
    if s.inverse_images is not None:
        out["inverse"] = {k: str(v) for k, v in s.inverse_images}
    return out


def _endo_from_json(ring: CoeffRing, doc) -> EndoSpec:
    if doc == "identity":
        return EndoSpec()
    images = {k: ring.parse(v) for k, v in doc["images"].items()}
    inverse = doc.get("inverse")
    if inverse is not None:
        inverse = {k: ring.parse(v) for k, v in inverse.items()}
    return EndoSpec.from_images(ring, images, inverse)


def _deriv_to_json(d: DerivSpec):
    if d.is_zero:
        return "zero"
    return {"images": {k: str(v) for k, v in d.images}}


def _deriv_from_json(ring: CoeffRing, doc) -> DerivSpec:
    if doc == "zero":
        return DerivSpec()
    return DerivSpec.from_images(ring, {k: ring.parse(v) for k, v in doc["images"].items()})


def presentation_to_dict(P: Presentation) -> dict:
    n = P.n
    tails = {}
    for (i, j), tail in sorted(P.tails.items()):
        entry = {}
        for alpha, v in tail.terms:
            entry["0" if not any(alpha) else str(alpha.index(1) + 1)] = str(v)
        tails[f"{i + 1},{j + 1}"] = dict(sorted(entry.items(), key=lambda kv: int(kv[0])))
    return {
        "ring": ring_to_spec(P.ring),
        "n": n,
        "sigma": [_endo_to_json(s) for s in P.sigma],
        "delta": [_deriv_to_json(d) for d in P.delta],
        "c": [[str(P.c(i, j)) for j in range(i + 1, n)] for i in range(n - 1)],
        "tails": tails,
        "flags": {"quasi_commutative": P.quasi_commutative, "bijective": P.bijective},
    }


def presentation_from_dict(doc: dict, *, check: bool = True) -> Presentation:
    ring = ring_from_spec(doc["ring"])
    n = int(doc["n"])
    sigma = [_endo_from_json(ring, s) for s in doc.get("sigma", ["identity"] * n)]
    delta = [_deriv_from_json(ring, d) for d in doc.get("delta", ["zero"] * n)]
    c = {}
    for i, row in enumerate(doc.get("c", [])):
        for off, v in enumerate(row):
            c[(i, i + 1 + off)] = ring.parse(v)
    tails = {}
    for key, entry in doc.get("tails", {}).items():
        i, j = (int(p) - 1 for p in key.split(","))
        spec = {}
        for k, v in entry.items():
            k = int(k)
            spec[tuple(int(m == k - 1) for m in range(n))] = ring.parse(v)
        tails[(i, j)] = spec
    flags = doc.get("flags", {})
    return Presentation(
        ring,
        n,
        sigma=sigma,
        delta=delta,
        c=c,
        tails=tails,
        quasi_commutative=flags.get("quasi_commutative"),
        bijective=flags.get("bijective"),
        check=check,
    )


def dumps_presentation(P: Presentation) -> str:
    return json.dumps(presentation_to_dict(P), indent=2) + "\n"


def loads_presentation(text: str, *, check: bool = True) -> Presentation:
    return presentation_from_dict(json.loads(text), check=check)


def save_presentation(P: Presentation, path) -> None:
    Path(path).write_text(dumps_presentation(P))


def load_presentation(path, *, check: bool = True) -> Presentation:
    return loads_presentation(Path(path).read_text(), check=check)


# --------------------------------------------------------------------------
# q-matrix files


def qmatrix_from_dict(doc: dict) -> tuple[QMatrix, list, CoeffRing]:
    """``(q, sigma, ring)`` from ``{"ring", "n", "q": {"i,j": ..}, "sigma": [..]}``."""
    ring = ring_from_spec(doc["ring"])
    n = int(doc["n"])
    entries = {}
    for key, v in doc.get("q", {}).items():
        i, j = (int(p) - 1 for p in key.split(","))
        entries[(i, j)] = ring.parse(v)
    sigma = [_endo_from_json(ring, s) for s in doc.get("sigma", ["identity"] * n)]
    return QMatrix(ring, n, entries), sigma, ring


def qmatrix_to_dict(q: QMatrix, sigma=None) -> dict:
    sigma = sigma or [EndoSpec()] * q.n
    return {
        "ring": ring_to_spec(q.ring),
        "n": q.n,
        "q": {f"{i + 1},{j + 1}": str(v) for (i, j), v in q.upper().items()},
        "sigma": [_endo_to_json(s) for s in sigma],
    }


def load_qmatrix(path) -> tuple[QMatrix, list, CoeffRing]:
    return qmatrix_from_dict(json.loads(Path(path).read_text()))


# --------------------------------------------------------------------------
# elements


def terms_to_json(terms) -> list:
    return [{"monomial": list(alpha), "coeff": str(c)} for alpha, c in terms]


def element_to_json(f: Element) -> dict:
    return {"terms": terms_to_json(f.terms), "text": str(f)}
