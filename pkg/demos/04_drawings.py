# Grid drawings, compaction, zones and the way back to an arrangement.

from pathlib import Path

from learnspace import (
    assign_coordinates,
    build_graph,
    compact,
    drawing_to_arrangement,
    extract_zones,
    prefix_suffix_family,
    recognize,
    region_family,
    render_svg,
    validate_upright_quad,
    SvgOptions,
)

F = prefix_suffix_family("abcd")
G = build_graph(F)
D = assign_coordinates(F, recognize(F))
print("span before:", D.span(), "valid:", validate_upright_quad(D, G).ok)

C = compact(D, G)
print("span after:", C.span(), "valid:", validate_upright_quad(C, G).ok)

u = F.universe
for z in extract_zones(C, G):
    print("zone", u.elements[z.label], "faces", len(z.faces), "bridge" if z.is_bridge else "")

A = drawing_to_arrangement(C, G)
print("recovered permutation:", A.permutation)
print("same family:", region_family(A).relabel(u) == F)

out = Path("prefix_suffix4.svg")
out.write_text(render_svg(C, G, SvgOptions(edge_labels=True, state_labels=True)))
print("wrote", out)
