"""The .qp text format, DOT export, and JSON mirrors of the data model.

A document has sections introduced by ``vertices:``, ``arrows:``,
``potential:``, ``cut:`` and ``relations:``.  Potential documents and
algebra documents are distinguished by which of the last sections
appear.  ``#`` starts a comment.  Example::

    vertices: 1 2 3 4
    arrows:
      a: 1 -> 2
      b: 2 -> 4
      c: 1 -> 3
      d: 3 -> 4
      rho: 4 -> 1 @1
    potential:
      1 rho a b
    cut: rho

Relations may be named (``name: 1 a b - 1 c d``) or anonymous, in which
case they are numbered from 1.  ``parse(emit(x))`` is the identity on
canonical documents.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .core import Arrow, Path, PathPoly, Quiver, format_poly, validate_quiver
from .cuts import cut_from_grading, grading_from_cut
from .errors import ParseError
from .potential import GradedQP
from .presentation import AlgebraPresentation, Relation

SECTIONS = ("vertices", "arrows", "potential", "cut", "relations")

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")
_ARROW_LINE = re.compile(r"^(?P<name>\S+)\s*:\s*(?P<src>\S+)\s*->\s*(?P<tgt>\S+)"
                         r"(\s*@\s*(?P<deg>-?\d+))?$")


@dataclass
class ParsedDocument:
    kind: str  # "qp" | "algebra"
    qp: GradedQP | None = None
    cut: frozenset[str] | None = None
    presentation: AlgebraPresentation | None = None


def _strip_comment(line: str) -> str:
    if "#" in line:
        line = line[: line.index("#")]
    return line.rstrip()


def _tokenize_poly(expr: str, line_no: int) -> list[tuple[Fraction, list[str]]]:
    """Split ``[sign] [coeff] name+ ((+|-) [coeff] name+)*`` into terms."""
    tokens = expr.split()
    if not tokens:
        return []
    terms: list[tuple[Fraction, list[str]]] = []
    sign = Fraction(1)
    coeff: Fraction | None = None
    names: list[str] = []

    def flush():
        nonlocal sign, coeff, names
        if coeff is None and not names:
            raise ParseError("empty term in expression", line_no)
        if not names:
            raise ParseError("term has a coefficient but no arrows", line_no)
        terms.append((sign * (coeff if coeff is not None else 1), names))
        sign, coeff, names = Fraction(1), None, []

    first = True
    for tok in tokens:
        if tok in ("+", "-"):
            if not first:
                flush()
            sign = Fraction(1) if tok == "+" else Fraction(-1)
            first = False
            continue
        if _RATIONAL.match(tok):
            if names:
                flush()
            if tok.startswith(("+", "-")):
                sign = sign * (1 if tok[0] == "+" else -1)
                tok = tok[1:]
            if coeff is not None:
                raise ParseError(f"two coefficients in one term near {tok!r}", line_no)
            try:
                coeff = Fraction(tok)
            except ZeroDivisionError:
                raise ParseError(f"zero denominator in {tok!r}", line_no) from None
        else:
            names.append(tok)
        first = False
    flush()
    return terms


def _term_to_path(quiver: Quiver, names: list[str], line_no: int) -> Path:
    for n in names:
        if not quiver.has_arrow(n):
            raise ParseError(f"undeclared arrow {n!r}", line_no)
    try:
        return quiver.path(names)
    except Exception as exc:
        raise ParseError(str(exc), line_no) from None


def parse_document(text: str) -> ParsedDocument:
    """Parse either a QP document or an algebra document."""
    vertices: list[str] | None = None
    arrows: list[tuple[Arrow, int]] = []
    potential_lines: list[tuple[int, str]] = []
    relation_lines: list[tuple[int, str]] = []
    cut_names: list[str] | None = None
    saw = {s: False for s in SECTIONS}

    section = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        head = line.strip()
        m = re.match(r"^(\w+)\s*:($|\s.*|.*)", head)
        if m and m.group(1) in SECTIONS and not line[0].isspace():
            name = m.group(1)
            if saw[name]:
                raise ParseError(f"duplicate section {name!r}", line_no)
            saw[name] = True
            section = name
            inline = head[len(name) + 1:].strip()
            if not inline:
                continue
            head = inline
        elif m and not line[0].isspace() and m.group(1) not in SECTIONS \
                and section not in ("arrows", "relations"):
            raise ParseError(f"unknown section {m.group(1)!r}", line_no)
        if section is None:
            raise ParseError(f"content before any section: {head!r}", line_no)
        if section == "vertices":
            vertices = (vertices or []) + head.split()
        elif section == "arrows":
            am = _ARROW_LINE.match(head)
            if not am:
                raise ParseError(f"bad arrow declaration {head!r}", line_no)
            deg = int(am.group("deg")) if am.group("deg") else 0
            arrows.append((Arrow(am.group("name"), am.group("src"),
                                 am.group("tgt"), deg), line_no))
        elif section == "potential":
            potential_lines.append((line_no, head))
        elif section == "cut":
            cut_names = (cut_names or []) + head.split()
        elif section == "relations":
            relation_lines.append((line_no, head))

    if vertices is None:
        raise ParseError("missing vertices section")
    quiver = Quiver(vertices, [a for a, _ in arrows])
    report = validate_quiver(quiver)
    if report.errors:
        first_bad = arrows[0][1] if arrows else 1
        raise ParseError("; ".join(report.errors), first_bad)

    if saw["relations"] and (saw["potential"] or saw["cut"]):
        raise ParseError("a document has either relations or a potential/cut, not both")

    if saw["relations"]:
        if any(a.degree for a, _ in arrows):
            raise ParseError("algebra documents must not carry arrow degrees")
        relations = []
        auto = 0
        for line_no, head in relation_lines:
            name = None
            if ":" in head:
                candidate, rest = head.split(":", 1)
                if candidate and " " not in candidate.strip():
                    name = candidate.strip()
                    head = rest.strip()
            if name is None:
                auto += 1
                name = str(auto)
            terms = _tokenize_poly(head, line_no)
            poly = PathPoly([(_term_to_path(quiver, names, line_no), c)
                             for c, names in terms])
            try:
                relations.append(Relation(name, poly))
            except Exception as exc:
                raise ParseError(str(exc), line_no) from None
        try:
            pres = AlgebraPresentation(quiver, relations)
        except Exception as exc:
            raise ParseError(str(exc)) from None
        return ParsedDocument("algebra", presentation=pres)

    poly = PathPoly.zero()
    for line_no, head in potential_lines:
        for c, names in _tokenize_poly(head, line_no):
            poly = poly + PathPoly.of(_term_to_path(quiver, names, line_no), c)
    try:
        if cut_names is not None:
            base = GradedQP(quiver.zero_degrees(), poly)
            graded = grading_from_cut(base, frozenset(cut_names))
            if any(a.degree for a, _ in arrows):
                declared = {a.name: a.degree for a, _ in arrows}
                induced = {a.name: a.degree for a in graded.quiver.arrows}
                if declared != induced:
                    raise ParseError("declared degrees disagree with the cut grading")
            return ParsedDocument("qp", qp=graded, cut=frozenset(cut_names))
        qp = GradedQP(quiver, poly)
        cut = None
        if all(a.degree in (0, 1) for a in quiver.arrows) and any(
                a.degree == 1 for a in quiver.arrows):
            try:
                cut = cut_from_grading(qp)
            except Exception:
                cut = None
        return ParsedDocument("qp", qp=qp, cut=cut)
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(str(exc)) from None


def parse_qp(text: str) -> tuple[GradedQP, frozenset[str] | None]:
    doc = parse_document(text)
    if doc.kind != "qp":
        raise ParseError("expected a QP document, found an algebra document")
    return doc.qp, doc.cut


def parse_algebra(text: str) -> AlgebraPresentation:
    doc = parse_document(text)
    if doc.kind == "algebra":
        return doc.presentation
    if doc.qp is not None and not doc.qp.potential and not doc.cut:
        # a bare quiver doubles as a relation-free algebra
        return AlgebraPresentation(doc.qp.quiver, [])
    raise ParseError("expected an algebra document, found a QP document")


def emit_qp(g: GradedQP, cut: frozenset[str] | None = None) -> str:
    lines = [f"vertices: {' '.join(g.quiver.vertices)}", "arrows:"]
    for a in g.quiver.arrows:
        deg = f" @{a.degree}" if a.degree else ""
        lines.append(f"  {a.name}: {a.source} -> {a.target}{deg}")
    lines.append("potential:")
    for path, coeff in g.potential.sorted_terms():
        lines.append(f"  {coeff} {path}")
    if cut:
        ordered = [a.name for a in g.quiver.arrows if a.name in cut]
        lines.append(f"cut: {' '.join(ordered)}")
    return "\n".join(lines) + "\n"


def emit_algebra(p: AlgebraPresentation) -> str:
    lines = [f"vertices: {' '.join(p.quiver.vertices)}", "arrows:"]
    for a in p.quiver.arrows:
        lines.append(f"  {a.name}: {a.source} -> {a.target}")
    lines.append("relations:")
    for r in p.relations:
        lines.append(f"  {r.name}: {format_poly(r.poly, explicit_ones=True)}")
    return "\n".join(lines) + "\n"


def emit_document(doc: ParsedDocument) -> str:
    if doc.kind == "algebra":
        return emit_algebra(doc.presentation)
    return emit_qp(doc.qp, doc.cut)


def emit_dot(g: GradedQP, cut: frozenset[str] | None = None) -> str:
    """Directed-graph description; degree-1 (cut) arrows are dashed."""
    dashed = set(cut) if cut is not None else {
        a.name for a in g.quiver.arrows if a.degree == 1}
    lines = ["digraph qp {", "  rankdir=LR;"]
    for v in g.quiver.vertices:
        lines.append(f'  "{v}";')
    for a in g.quiver.arrows:
        style = ", style=dashed" if a.name in dashed else ""
        lines.append(f'  "{a.source}" -> "{a.target}" [label="{a.name}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def poly_terms_json(poly: PathPoly) -> list[dict]:
    return [{"coefficient": str(coeff), "start": path.start,
             "arrows": list(path.arrows)}
            for path, coeff in poly.sorted_terms()]


def qp_json(g: GradedQP, cut: frozenset[str] | None = None) -> dict:
    ordered_cut = [a.name for a in g.quiver.arrows if cut and a.name in cut]
    return {
        "kind": "qp",
        "vertices": list(g.quiver.vertices),
        "arrows": [{"name": a.name, "source": a.source, "target": a.target,
                    "degree": a.degree} for a in g.quiver.arrows],
        "potential": poly_terms_json(g.potential),
        "potential_text": format_poly(g.potential),
        "cut": ordered_cut,
        "declared_degree": g.declared_degree,
    }


def algebra_json(p: AlgebraPresentation) -> dict:
    return {
        "kind": "algebra",
        "vertices": list(p.quiver.vertices),
        "arrows": [{"name": a.name, "source": a.source, "target": a.target,
                    "degree": a.degree} for a in p.quiver.arrows],
        "relations": [{"name": r.name, "terms": poly_terms_json(r.poly),
                       "text": format_poly(r.poly)} for r in p.relations],
    }


def document_json(doc: ParsedDocument) -> dict:
    if doc.kind == "algebra":
        return algebra_json(doc.presentation)
    return qp_json(doc.qp, doc.cut)


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"
