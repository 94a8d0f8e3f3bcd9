"""The analysis-input document: parsing, serialisation, basis changes.

Schema (JSON):

    {"field": {"d": 2},
     "lie_algebra": {"dim": 3, "basis": ["t", "x", "y"],
                     "brackets": [{"i": 0, "j": 1, "k": 1, "c": "1"}, ...]},
     "lattice": {"generators": [{"name": "u", "ad": [["..."]],
                                 "abelianization_image": ["..."] | null,
                                 "eigenvalues": ["..."] | null}, ...],
                 "presentation": {"generators": 3, "relators": [[1,2,-1,-2,-3]]} | null,
                 "b1_semisimple_quotient": int | null,
                 "linear_algebraic": bool,
                 "b1_manifold_override": int | null},
     "options": {"depth": 4}}

Matrix entries, image coordinates and eigenvalues are field element strings
("a+b*r+c*i+e*i*r" with rationals "p/q", r = √d).  Omitted bracket triples
are zero; i < j is required.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InputFormatError
from .field import FieldDescriptor, format_element, parse_element
from .lattice import GeneratorData, LatticeData, Presentation
from .liealg import LieAlgebraData, conjugate_structure
from .linalg import Mat, Quotient, Subspace, mat_inverse, mat_mul, mat_vec


@dataclass
class AnalysisOptions:
    depth: int = 4


@dataclass
class AnalysisInput:
    field: FieldDescriptor
    algebra: LieAlgebraData
    lattice: LatticeData
    options: AnalysisOptions

    def to_dict(self) -> dict:
        brackets = []
        for (i, j), vec in sorted(self.algebra.table.items()):
            for k, c in enumerate(vec):
                if not c.is_zero():
                    brackets.append({"i": i, "j": j, "k": k, "c": format_element(c)})
        gens = []
        for g in self.lattice.generators:
            entry = {
                "name": g.name,
                "ad": [[format_element(x) for x in row] for row in g.ad],
                "abelianization_image": (
                    None if g.abelianization_image is None
                    else [format_element(x) for x in g.abelianization_image]),
                "eigenvalues": (
                    None if g.eigenvalues is None
                    else [format_element(x) for x in g.eigenvalues]),
            }
            gens.append(entry)
        pres = None
        if self.lattice.presentation is not None:
            pres = {"generators": self.lattice.presentation.generator_count,
                    "relators": [list(w) for w in self.lattice.presentation.relators]}
        return {
            "field": {"d": self.field.d},
            "lie_algebra": {
                "dim": self.algebra.dim,
                "basis": list(self.algebra.basis),
                "brackets": brackets,
            },
            "lattice": {
                "generators": gens,
                "presentation": pres,
                "b1_semisimple_quotient": self.lattice.b1_semisimple_quotient,
                "linear_algebraic": self.lattice.linear_algebraic,
                "b1_manifold_override": self.lattice.b1_manifold_override,
            },
            "options": {"depth": self.options.depth},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise InputFormatError(msg)


def parse_analysis_input(doc: dict | str) -> AnalysisInput:
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise InputFormatError(f"input is not valid JSON: {exc}") from None
    _expect(isinstance(doc, dict), "top level must be a JSON object")
    _expect("field" in doc, "missing 'field' section")
    _expect("lie_algebra" in doc, "missing 'lie_algebra' section")
    _expect("lattice" in doc, "missing 'lattice' section")

    fsec = doc["field"]
    _expect(isinstance(fsec, dict) and "d" in fsec, "'field' needs the key 'd'")
    fd = FieldDescriptor(fsec["d"])
    d = fd.d

    asec = doc["lie_algebra"]
    _expect(isinstance(asec, dict) and "dim" in asec, "'lie_algebra' needs 'dim'")
    dim = asec["dim"]
    _expect(isinstance(dim, int) and dim >= 0, "'lie_algebra.dim' must be a non-negative integer")
    basis = asec.get("basis") or [f"e{k}" for k in range(dim)]
    _expect(len(basis) == dim, "'lie_algebra.basis' length must equal dim")
    triples = []
    for idx, ent in enumerate(asec.get("brackets", [])):
        _expect(isinstance(ent, dict) and {"i", "j", "k", "c"} <= set(ent),
                f"bracket entry {idx} needs keys i, j, k, c")
        i, j, k = ent["i"], ent["j"], ent["k"]
        _expect(isinstance(i, int) and isinstance(j, int) and isinstance(k, int)
                and 0 <= i < j < dim and 0 <= k < dim,
                f"bracket entry {idx}: need 0 <= i < j < dim and 0 <= k < dim")
        triples.append((i, j, k, parse_element(d, ent["c"])))
    algebra = LieAlgebraData.from_triples(d, dim, basis, triples)

    lsec = doc["lattice"]
    _expect(isinstance(lsec, dict) and "generators" in lsec,
            "'lattice' needs a 'generators' list")
    gens = []
    for idx, ent in enumerate(lsec["generators"]):
        _expect(isinstance(ent, dict) and "ad" in ent,
                f"generator {idx} needs an 'ad' matrix")
        name = ent.get("name") or f"g{idx}"
        ad_raw = ent["ad"]
        _expect(isinstance(ad_raw, list) and len(ad_raw) == dim
                and all(isinstance(r, list) and len(r) == dim for r in ad_raw),
                f"generator {name!r}: 'ad' must be a {dim}x{dim} matrix")
        ad = [[parse_element(d, x) for x in row] for row in ad_raw]
        img = ent.get("abelianization_image")
        image = None if img is None else tuple(parse_element(d, x) for x in img)
        eig = ent.get("eigenvalues")
        eigenvalues = None if eig is None else tuple(parse_element(d, x) for x in eig)
        gens.append(GeneratorData(name=name, ad=ad, abelianization_image=image,
                                  eigenvalues=eigenvalues))

    pres_raw = lsec.get("presentation")
    presentation = None
    if pres_raw is not None:
        _expect(isinstance(pres_raw, dict) and "generators" in pres_raw
                and "relators" in pres_raw,
                "'presentation' needs 'generators' and 'relators'")
        gc = pres_raw["generators"]
        _expect(isinstance(gc, int) and gc >= 0,
                "'presentation.generators' must be a non-negative integer")
        rel = pres_raw["relators"]
        _expect(isinstance(rel, list) and all(isinstance(w, list) for w in rel),
                "'presentation.relators' must be a list of integer lists")
        presentation = Presentation(generator_count=gc,
                                    relators=[list(w) for w in rel])

    b1ss = lsec.get("b1_semisimple_quotient")
    _expect(b1ss is None or (isinstance(b1ss, int) and b1ss >= 0),
            "'b1_semisimple_quotient' must be null or a non-negative integer")
    b1ov = lsec.get("b1_manifold_override")
    _expect(b1ov is None or (isinstance(b1ov, int) and b1ov >= 0),
            "'b1_manifold_override' must be null or a non-negative integer")
    lin = bool(lsec.get("linear_algebraic", False))

    lattice = LatticeData(generators=gens, presentation=presentation,
                          b1_semisimple_quotient=b1ss, linear_algebraic=lin,
                          b1_manifold_override=b1ov)

    osec = doc.get("options") or {}
    depth = osec.get("depth", 4)
    _expect(isinstance(depth, int) and depth >= 1,
            "'options.depth' must be a positive integer")

    return AnalysisInput(field=fd, algebra=algebra, lattice=lattice,
                         options=AnalysisOptions(depth=depth))


def conjugated_input(ai: AnalysisInput, T: Mat) -> AnalysisInput:
    """The same analysis data written in the basis given by T's columns.

    Structure constants and automorphism matrices conjugate; abelianization
    images are re-expressed through the canonical quotient bases of the two
    presentations of g/g'.  Every reported dimension must be unchanged.
    """
    d = ai.field.d
    algebra2 = conjugate_structure(ai.algebra, T)
    Tinv = mat_inverse(T)
    full = Subspace.full(d, ai.algebra.dim)

    def gprime_quotient(L: LieAlgebraData) -> Quotient:
        gp = L.bracket_span(full, full)
        return Quotient(full, gp)

    Q_old = gprime_quotient(ai.algebra)
    Q_new = gprime_quotient(algebra2)
    gens2 = []
    for g in ai.lattice.generators:
        ad2 = mat_mul(Tinv, mat_mul(g.ad, T))
        img2 = None
        if g.abelianization_image is not None:
            ambient_old = Q_old.lift(g.abelianization_image)
            img2 = Q_new.project(mat_vec(Tinv, ambient_old))
        gens2.append(GeneratorData(name=g.name, ad=ad2,
                                   abelianization_image=img2,
                                   eigenvalues=g.eigenvalues))
    lattice2 = LatticeData(
        generators=gens2,
        presentation=ai.lattice.presentation,
        b1_semisimple_quotient=ai.lattice.b1_semisimple_quotient,
        linear_algebraic=ai.lattice.linear_algebraic,
        b1_manifold_override=ai.lattice.b1_manifold_override,
    )
    return AnalysisInput(field=ai.field, algebra=algebra2, lattice=lattice2,
                         options=ai.options)
