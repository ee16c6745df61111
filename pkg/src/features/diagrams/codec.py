import re

from src.core.exceptions import DiagramException, DiagramParseException

from .model import ChordDiagram

_DIAGRAM_RE = re.compile(r"^\s*k=(\d+)\s+((?:\[[^\[\]]*\]\s*)+)$")
_COMPONENT_RE = re.compile(r"\[([^\[\]]*)\]")
_ID_RE = re.compile(r"^[A-Za-z0-9]+$")


def parse_diagram(text: str) -> ChordDiagram:
    """Parse `k=INT [ids...][ids...]...`, strands listed 1..k, endpoints bottom to top."""
    match = _DIAGRAM_RE.match(text)
    if not match:
        raise DiagramParseException(f"malformed diagram: {text!r}")
    strand_count = int(match.group(1))
    if strand_count == 0:
        raise DiagramParseException("k must be at least 1")

    strands = []
    for component in _COMPONENT_RE.findall(match.group(2)):
        ids = component.split()
        for chord in ids:
            if not _ID_RE.match(chord):
                raise DiagramParseException(f"chord id must be alphanumeric: {chord!r}")
        strands.append(ids)
    if len(strands) != strand_count:
        raise DiagramParseException(f"k={strand_count} but {len(strands)} strand(s) given")

    try:
        return ChordDiagram.from_strands(strands)
    except DiagramException as exc:
        raise DiagramParseException(str(exc)) from exc


def serialize(diagram: ChordDiagram) -> str:
    return diagram.canonical().to_text()


def canonical_code(diagram: ChordDiagram) -> str:
    return diagram.code
