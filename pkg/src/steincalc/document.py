"""The JSON input document: surfaces, curves, words, relators, declarations.

Parsing is total: anything malformed is rejected with a location-annotated
error rather than a partial document.  Words serialize as ordered lists of
{curve, sign} so certificate positions stay meaningful, and parse/serialize
round-trip exactly.

Generators at the bottom emit ready-made documents for the standard
configurations (boundary multitwist, lantern, chains, the non-standard
relator), so the stock examples are reproducible without hand-writing
vectors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .errors import DocumentError
from .planarity import BoundingDeclaration
from .relators import (
    RelatorEntry,
    braid_relator,
    chain,
    ChainConfig,
    lantern,
    non_standard_relator,
)
from .surfaces import Arc, Curve, HomologyClass, NamePair, Surface, convex_curve
from .words import Relator, Twist, Word


@dataclass
class Document:
    """A validated input document."""

    surface: Surface
    curves: Dict[str, Curve]
    words: Dict[str, Word]
    relator_entries: Dict[str, RelatorEntry]
    relator_decls: Tuple[dict, ...] = ()
    arcs: Tuple[Arc, ...] = ()
    declarations: Tuple[BoundingDeclaration, ...] = ()
    baselines: Dict[str, int] = field(default_factory=dict)
    disjoint: FrozenSet[NamePair] = frozenset()
    rotations: Dict[str, Tuple[int, ...]] = field(default_factory=dict)
    mu_maps: Dict[str, Tuple[Tuple[int, ...], ...]] = field(default_factory=dict)


def _require(condition: bool, location: str, message: str) -> None:
    if not condition:
        raise DocumentError(location, message)


def _parse_curve(surface: Surface, spec: dict, location: str) -> Curve:
    _require(isinstance(spec, dict), location, "curve entries must be objects")
    name = spec.get("name")
    _require(isinstance(name, str) and bool(name), location, "curve needs a non-empty string name")
    rotation = spec.get("rotation")
    _require(rotation is None or isinstance(rotation, int), f"{location}.rotation", "rotation must be an integer")
    parallel = spec.get("boundary_parallel_to")
    _require(
        parallel is None or isinstance(parallel, int),
        f"{location}.boundary_parallel_to",
        "boundary index must be an integer",
    )
    holes = spec.get("holes")
    homology = spec.get("homology")
    _require(
        (holes is None) != (homology is None),
        location,
        "declare exactly one of 'holes' (planar convex curve) or 'homology'",
    )
    try:
        if holes is not None:
            _require(
                isinstance(holes, list) and all(isinstance(h, int) for h in holes),
                f"{location}.holes",
                "holes must be a list of integers",
            )
            _require(surface.genus == 0, f"{location}.holes", "hole sets only make sense on planar surfaces")
            if 1 in holes:
                raise DocumentError(
                    f"{location}.holes",
                    "boundary 1 is the outer boundary; declare the curve parallel to it with "
                    "boundary_parallel_to: 1 and holes [2..b]",
                )
            return convex_curve(
                surface, name, holes,
                outer=parallel == 1,
                rotation=rotation,
                boundary_parallel_to=parallel,
            )
        _require(
            isinstance(homology, list) and all(isinstance(x, int) for x in homology),
            f"{location}.homology",
            "homology must be a list of integers",
        )
        _require(
            len(homology) == surface.rank,
            f"{location}.homology",
            f"vector length {len(homology)} does not match surface rank {surface.rank}",
        )
        return Curve(
            name=name,
            homology=HomologyClass(surface, tuple(homology)),
            rotation=rotation,
            boundary_parallel_to=parallel,
        )
    except DocumentError:
        raise
    except Exception as exc:  # surface-model validation errors, relocated
        raise DocumentError(location, str(exc)) from exc


def _parse_word(surface: Surface, curves: Dict[str, Curve], spec, location: str) -> Word:
    _require(isinstance(spec, list), location, "a word is a list of {curve, sign} objects")
    twists = []
    for i, t in enumerate(spec):
        where = f"{location}[{i}]"
        _require(isinstance(t, dict), where, "each twist is an object")
        cname = t.get("curve")
        _require(isinstance(cname, str), where, "twist needs a curve name")
        _require(cname in curves, where, f"word references undeclared curve '{cname}'")
        sign = t.get("sign", 1)
        _require(sign in (1, -1), f"{where}.sign", "sign must be 1 or -1")
        twists.append(Twist(curves[cname], sign))
    return Word(surface, tuple(twists))


def _resolve_curves(curves: Dict[str, Curve], names: Sequence[str], location: str) -> List[Curve]:
    out = []
    for n in names:
        _require(isinstance(n, str) and n in curves, location, f"unknown curve name '{n}'")
        out.append(curves[n])
    return out


def _parse_relator(
    surface: Surface, curves: Dict[str, Curve], spec: dict, location: str
) -> Tuple[str, RelatorEntry]:
    _require(isinstance(spec, dict), location, "relator entries must be objects")
    name = spec.get("name")
    _require(isinstance(name, str) and bool(name), location, "relator needs a name")
    kind = spec.get("kind", "user")
    try:
        if kind == "lantern":
            names = spec.get("curves")
            _require(isinstance(names, list) and len(names) == 7, location,
                     "a lantern takes seven curve names: a1 a2 a3 a4 a12 a23 a13")
            return name, lantern(*_resolve_curves(curves, names, location), name=name)
        if kind == "chain":
            chain_names = spec.get("curves")
            boundary_names = spec.get("boundary")
            _require(isinstance(chain_names, list) and chain_names, location, "a chain takes curve names")
            _require(isinstance(boundary_names, list) and boundary_names, location,
                     "a chain takes boundary curve names")
            config = ChainConfig(
                surface=surface,
                curves=tuple(_resolve_curves(curves, chain_names, location)),
                boundary=tuple(_resolve_curves(curves, boundary_names, location)),
            )
            return name, chain(len(chain_names), config, name=name)
        if kind == "braid":
            names = spec.get("curves")
            _require(isinstance(names, list) and len(names) == 3, location,
                     "a braid takes three curve names: alpha, beta, image")
            return name, braid_relator(*_resolve_curves(curves, names, location), name=name)
        if kind == "non-standard":
            entry = non_standard_relator()
            for c in entry.relator.curves():
                _require(
                    curves.get(c.name) == c,
                    location,
                    f"the non-standard relator needs curve '{c.name}' with its standard data",
                )
            return name, entry
        if kind == "user":
            left = _parse_word(surface, curves, spec.get("left"), f"{location}.left")
            right = _parse_word(surface, curves, spec.get("right"), f"{location}.right")
            _require(left.is_positive and right.is_positive, location,
                     "relator sides must be positive words")
            sigma_delta = spec.get("sigma_delta")
            _require(sigma_delta is None or isinstance(sigma_delta, int),
                     f"{location}.sigma_delta", "sigma_delta must be an integer when present")
            relator = Relator(
                name=name,
                left=left,
                right=right,
                euler_delta=len(right) - len(left),
                sigma_delta=sigma_delta,
                allowable=all(c.is_allowable for c in set(t.curve for t in left.twists + right.twists)),
                provenance="user-asserted",
            )
            obstruction = relator.obstruction
            return name, RelatorEntry(relator=relator, obstruction=obstruction)
    except DocumentError:
        raise
    except Exception as exc:
        raise DocumentError(location, str(exc)) from exc
    raise DocumentError(location, f"unknown relator kind '{kind}'")


def parse(text: str) -> Document:
    """Parse and validate a document; reject with located errors."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}, column {exc.colno}", exc.msg) from exc
    _require(isinstance(data, dict), "$", "a document is a JSON object")

    sspec = data.get("surface")
    _require(isinstance(sspec, dict), "surface", "a document needs a surface {genus, boundary}")
    genus = sspec.get("genus")
    boundary = sspec.get("boundary")
    _require(isinstance(genus, int) and genus >= 0, "surface.genus", "genus must be a non-negative integer")
    _require(isinstance(boundary, int) and boundary >= 1, "surface.boundary", "boundary count must be a positive integer")
    surface = Surface(genus, boundary)

    curves: Dict[str, Curve] = {}
    for i, cspec in enumerate(data.get("curves", [])):
        curve = _parse_curve(surface, cspec, f"curves[{i}]")
        _require(curve.name not in curves, f"curves[{i}]", f"duplicate curve name '{curve.name}'")
        curves[curve.name] = curve

    words: Dict[str, Word] = {}
    wspec = data.get("words", {})
    _require(isinstance(wspec, dict), "words", "words must be an object of name -> twist list")
    for wname, twists in wspec.items():
        words[wname] = _parse_word(surface, curves, twists, f"words.{wname}")

    relator_entries: Dict[str, RelatorEntry] = {}
    relator_decls: List[dict] = []
    for i, rspec in enumerate(data.get("relators", [])):
        rname, entry = _parse_relator(surface, curves, rspec, f"relators[{i}]")
        _require(rname not in relator_entries, f"relators[{i}]", f"duplicate relator name '{rname}'")
        relator_entries[rname] = entry
        relator_decls.append(rspec)

    arcs: List[Arc] = []
    for i, aspec in enumerate(data.get("arcs", [])):
        where = f"arcs[{i}]"
        _require(isinstance(aspec, dict), where, "arc entries must be objects")
        index = aspec.get("index")
        rel = aspec.get("rel_class")
        _require(isinstance(index, int), f"{where}.index", "arc index must be an integer")
        _require(
            isinstance(rel, list) and all(isinstance(x, int) for x in rel) and len(rel) == surface.rank,
            f"{where}.rel_class",
            f"rel_class must be an integer vector of length {surface.rank}",
        )
        try:
            arcs.append(Arc(surface, index, tuple(rel)))
        except Exception as exc:
            raise DocumentError(where, str(exc)) from exc

    declarations: List[BoundingDeclaration] = []
    for i, dspec in enumerate(data.get("declarations", [])):
        where = f"declarations[{i}]"
        _require(isinstance(dspec, dict), where, "declarations must be objects")
        g = dspec.get("genus")
        b = dspec.get("boundary")
        names = dspec.get("multicurve")
        _require(isinstance(g, int) and g >= 0, f"{where}.genus", "genus must be a non-negative integer")
        _require(isinstance(b, int) and b >= 1, f"{where}.boundary", "boundary count must be positive")
        _require(isinstance(names, list), f"{where}.multicurve", "multicurve must be a list of curve names")
        multicurve = tuple(_resolve_curves(curves, names, f"{where}.multicurve"))
        try:
            declarations.append(BoundingDeclaration(g, b, multicurve))
        except Exception as exc:
            raise DocumentError(where, str(exc)) from exc

    baselines: Dict[str, int] = {}
    bspec = data.get("baselines", {})
    _require(isinstance(bspec, dict), "baselines", "baselines must map word names to integers")
    for wname, value in bspec.items():
        _require(wname in words, f"baselines.{wname}", f"baseline for undeclared word '{wname}'")
        _require(isinstance(value, int), f"baselines.{wname}", "asserted signature must be an integer")
        baselines[wname] = value

    disjoint = set()
    for i, pair in enumerate(data.get("disjoint", [])):
        where = f"disjoint[{i}]"
        _require(
            isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, str) for x in pair),
            where,
            "each disjointness fact is a pair of curve names",
        )
        _resolve_curves(curves, pair, where)
        disjoint.add(frozenset(pair))

    rotations: Dict[str, Tuple[int, ...]] = {}
    for wname, rots in data.get("rotations", {}).items():
        where = f"rotations.{wname}"
        _require(wname in words, where, f"rotations for undeclared word '{wname}'")
        _require(
            isinstance(rots, list) and all(isinstance(r, int) for r in rots) and len(rots) == len(words[wname]),
            where,
            "rotations must list one integer per twist of the word",
        )
        rotations[wname] = tuple(rots)

    mu_maps: Dict[str, Tuple[Tuple[int, ...], ...]] = {}
    for wname, mus in data.get("mu_maps", {}).items():
        where = f"mu_maps.{wname}"
        _require(wname in words, where, f"meridian map for undeclared word '{wname}'")
        _require(
            isinstance(mus, list) and len(mus) == len(words[wname]),
            where,
            "the meridian map lists one homology vector per twist",
        )
        vectors = []
        for j, mu in enumerate(mus):
            _require(
                isinstance(mu, list) and all(isinstance(x, int) for x in mu) and len(mu) == surface.rank,
                f"{where}[{j}]",
                f"meridian classes are integer vectors of length {surface.rank}",
            )
            vectors.append(tuple(mu))
        mu_maps[wname] = tuple(vectors)

    return Document(
        surface=surface,
        curves=curves,
        words=words,
        relator_entries=relator_entries,
        relator_decls=tuple(relator_decls),
        arcs=tuple(arcs),
        declarations=tuple(declarations),
        baselines=baselines,
        disjoint=frozenset(disjoint),
        rotations=rotations,
        mu_maps=mu_maps,
    )


def word_payload(word: Word) -> List[dict]:
    return [{"curve": t.curve.name, "sign": t.sign} for t in word.twists]


def document_payload(doc: Document) -> dict:
    """The JSON-ready form of a document; parse(serialize(doc)) == doc."""
    curves = []
    for c in doc.curves.values():
        spec: dict = {"name": c.name}
        if c.hole_set is not None:
            spec["holes"] = sorted(c.hole_set)
        else:
            spec["homology"] = list(c.homology.coords)
        if c.rotation is not None:
            spec["rotation"] = c.rotation
        if c.boundary_parallel_to is not None:
            spec["boundary_parallel_to"] = c.boundary_parallel_to
        curves.append(spec)
    payload: dict = {
        "surface": {"genus": doc.surface.genus, "boundary": doc.surface.boundary_count},
        "curves": curves,
        "words": {name: word_payload(w) for name, w in doc.words.items()},
    }
    if doc.relator_decls:
        payload["relators"] = [dict(d) for d in doc.relator_decls]
    if doc.arcs:
        payload["arcs"] = [{"index": a.index, "rel_class": list(a.rel_class)} for a in doc.arcs]
    if doc.declarations:
        payload["declarations"] = [
            {"genus": d.genus, "boundary": d.boundary_count, "multicurve": [c.name for c in d.multicurve]}
            for d in doc.declarations
        ]
    if doc.baselines:
        payload["baselines"] = dict(doc.baselines)
    if doc.disjoint:
        payload["disjoint"] = sorted(sorted(pair) for pair in doc.disjoint)
    if doc.rotations:
        payload["rotations"] = {name: list(r) for name, r in doc.rotations.items()}
    if doc.mu_maps:
        payload["mu_maps"] = {name: [list(v) for v in vs] for name, vs in doc.mu_maps.items()}
    return payload


def serialize(doc: Document) -> str:
    return json.dumps(document_payload(doc), indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# Ready-made documents


def _boundary_rotation(g: int, b: int, j: int) -> int:
    if j == 1:
        return 0
    if j == b:
        return 2 * g
    return 1


def tau_boundary_document(g: int, b: int) -> Document:
    """One positive twist about each boundary component of the genus-g,
    b-holed page, with the flat-page rotation numbers attached.

    On the four-holed sphere the lantern configuration is included; at
    positive genus the matching bounded-subsurface declaration is.
    """
    surface = Surface(g, b)
    specs: List[dict] = []
    if g == 0:
        specs.append({
            "name": "d1",
            "holes": list(range(2, b + 1)),
            "boundary_parallel_to": 1,
            "rotation": 0,
        })
    else:
        specs.append({
            "name": "d1",
            "homology": list(surface.outer_boundary_class().coords),
            "boundary_parallel_to": 1,
            "rotation": 0,
        })
    for j in range(2, b + 1):
        base: dict = {"name": f"d{j}", "rotation": _boundary_rotation(g, b, j), "boundary_parallel_to": j}
        if g == 0:
            base["holes"] = [j]
        else:
            base["homology"] = list(surface.d_class(j).coords)
        specs.append(base)
    data: dict = {
        "surface": {"genus": g, "boundary": b},
        "curves": specs,
        "words": {"tau_del": [{"curve": f"d{j}" if j > 1 else "d1", "sign": 1} for j in range(1, b + 1)]},
        "baselines": {"tau_del": -1},
    }
    if g == 0 and b == 4:
        data["curves"] += [
            {"name": "a12", "holes": [2, 3]},
            {"name": "a23", "holes": [3, 4]},
            {"name": "a13", "holes": [2, 4]},
        ]
        data["relators"] = [
            {"name": "lantern", "kind": "lantern",
             "curves": ["d2", "d3", "d4", "d1", "a12", "a23", "a13"]},
        ]
    if g >= 1:
        data["declarations"] = [
            {"genus": g, "boundary": b, "multicurve": [f"d{j}" if j > 1 else "d1" for j in range(1, b + 1)]}
        ]
    return parse(json.dumps(data))


def lantern_document() -> Document:
    """The four-holed sphere document with both lantern sides as words."""
    doc_data = json.loads(serialize(tau_boundary_document(0, 4)))
    doc_data["words"]["lantern_left"] = [
        {"curve": "d2", "sign": 1},
        {"curve": "d3", "sign": 1},
        {"curve": "d4", "sign": 1},
        {"curve": "d1", "sign": 1},
    ]
    doc_data["words"]["lantern_right"] = [
        {"curve": "a12", "sign": 1},
        {"curve": "a23", "sign": 1},
        {"curve": "a13", "sign": 1},
    ]
    return parse(json.dumps(doc_data))


def chain_document(n: int) -> Document:
    """The length-n chain on its minimal supporting surface, with the
    boundary twists and the chain power as words."""
    from .relators import standard_chain_config

    config = standard_chain_config(n)
    surface = config.surface
    power = 2 * n + 2 if n % 2 == 0 else n + 1
    curves = []
    for c in config.curves + config.boundary:
        spec: dict = {"name": c.name, "homology": list(c.homology.coords)}
        if c.boundary_parallel_to is not None:
            spec["boundary_parallel_to"] = c.boundary_parallel_to
        curves.append(spec)
    data: dict = {
        "surface": {"genus": surface.genus, "boundary": surface.boundary_count},
        "curves": curves,
        "words": {
            "boundary": [{"curve": c.name, "sign": 1} for c in config.boundary],
            "chain_power": [{"curve": c.name, "sign": 1} for c in list(config.curves) * power],
        },
        "relators": [
            {"name": f"chain-{n}", "kind": "chain",
             "curves": [c.name for c in config.curves],
             "boundary": [c.name for c in config.boundary]},
        ],
    }
    if surface.boundary_count >= 2:
        data["baselines"] = {"boundary": -1}
    if surface.genus >= 1:
        data["declarations"] = [
            {"genus": surface.genus, "boundary": surface.boundary_count,
             "multicurve": [c.name for c in config.boundary]}
        ]
    return parse(json.dumps(data))


def non_standard_document() -> Document:
    """The genus-1, three-holed surface carrying the non-standard relator,
    with both sides as words."""
    entry = non_standard_relator()
    curves = []
    for c in entry.relator.curves():
        spec: dict = {"name": c.name, "homology": list(c.homology.coords)}
        if c.boundary_parallel_to is not None:
            spec["boundary_parallel_to"] = c.boundary_parallel_to
        curves.append(spec)
    surface = entry.relator.left.surface
    data = {
        "surface": {"genus": surface.genus, "boundary": surface.boundary_count},
        "curves": curves,
        "words": {
            "short_side": word_payload(entry.relator.left),
            "long_side": word_payload(entry.relator.right),
        },
        "relators": [{"name": "non-standard", "kind": "non-standard"}],
    }
    return parse(json.dumps(data))
