# commands/groups.py
import logging

import click

from commands.common import emit, generator_file_argument, handle_errors, json_option, load_generators
from models.classify import classify_iso_type, decomposition_types
from models.group import FiniteRotGroup, generate_closure
from models.properties import DESCRIPTIONS, PropertyTag, check_property
from models.words import ABELIAN, FREE, word_no_relation_search
from utils.config import CLOSURE_CAP, SUBGROUP_GUARD

logger = logging.getLogger(__name__)

cap_option = click.option("--cap", type=int, default=CLOSURE_CAP, show_default=True,
                          help="Largest group order explored before giving up.")


def _close(generator_file: str, cap: int) -> FiniteRotGroup:
    file = load_generators(generator_file)
    return generate_closure(file.generators, cap=cap, d=file.ambient_d)


def _factor_label(group, h) -> str:
    return f"{classify_iso_type(group, h).label} {sorted(h)}"


@click.command("closure")
@generator_file_argument
@cap_option
@json_option
@handle_errors
def closure_cmd(generator_file, cap, as_json):
    """Generate the group and summarize its order, type, centre and decompositions."""
    group = _close(generator_file, cap)
    iso = classify_iso_type(group)
    data = {"order": group.order, "ambient_d": group.d, "type": iso.label}
    head = f"order {group.order}, {iso.label}"

    if group.order > SUBGROUP_GUARD:
        data["subgroup_data"] = f"skipped: order exceeds the guard {SUBGROUP_GUARD}"
        emit(as_json, "closure", data, [head, data["subgroup_data"]])
        return

    types = decomposition_types(group, group.direct_product_decompositions())
    data.update({
        "center_order": len(group.center()),
        "subgroup_count": len(group.subgroups()),
        "decompositions": [{"type": label, "count": count} for label, count in types],
    })
    if types:
        head += ", decompositions: " + "; ".join(label for label, _ in types)
    else:
        head += ", indecomposable"
    lines = [head, f"center order {data['center_order']}", f"subgroups {data['subgroup_count']}"]
    emit(as_json, "closure", data, lines)


@click.command("props")
@generator_file_argument
@cap_option
@click.option("--tag", "tags", multiple=True, type=click.Choice([t.value for t in PropertyTag]),
              help="Only check these properties (repeatable).")
@json_option
@handle_errors
def props_cmd(generator_file, cap, tags, as_json):
    """Decide each property on the generated group, with witnesses for failures."""
    group = _close(generator_file, cap)
    selected = [PropertyTag(t) for t in tags] or list(PropertyTag)
    reports = [check_property(group, tag) for tag in selected]

    lines = []
    for report in reports:
        verdict = "holds" if report.holds else "fails"
        if report.vacuous:
            verdict += " (vacuous)"
        line = f"{report.tag.value}: {verdict} - {DESCRIPTIONS[report.tag]}"
        if report.witnesses:
            line += f"; witness {report.witnesses}"
        lines.append(line)
    emit(as_json, "props", {"order": group.order, "reports": [r.to_json(group) for r in reports]}, lines)


@click.command("decompose")
@generator_file_argument
@cap_option
@json_option
@handle_errors
def decompose_cmd(generator_file, cap, as_json):
    """List every internal decomposition G = H × K of the generated group."""
    group = _close(generator_file, cap)
    decs = group.direct_product_decompositions()
    types = decomposition_types(group, decs)

    lines = [f"order {group.order}, {len(decs)} decompositions"]
    lines += [f"{label}: {count}" for label, count in types]
    lines += [f"  {_factor_label(group, d.factor_h)} × {_factor_label(group, d.factor_k)}" for d in decs]
    data = {
        "order": group.order,
        "types": [{"type": label, "count": count} for label, count in types],
        "decompositions": [d.to_json() for d in decs],
        "elements": [m.to_json() for m in group.elements],
    }
    emit(as_json, "decompose", data, lines)


@click.command("words")
@generator_file_argument
@click.option("--max-len", type=int, default=8, show_default=True)
@click.option("--mode", type=click.Choice([FREE, ABELIAN]), default=FREE, show_default=True)
@json_option
@handle_errors
def words_cmd(generator_file, max_len, mode, as_json):
    """Search short words in the generators for a relation."""
    gens = load_generators(generator_file).generators
    result = word_no_relation_search(gens, max_len, mode)
    emit(as_json, "words", dict(result.to_json(), mode=mode, max_len=max_len), [str(result)])
