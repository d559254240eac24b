from .canonical import (
    ProjectiveCurve,
    ProjectiveSurface,
    bbar_main,
    bbar_special,
    curve_c1,
    curve_c2,
    curve_q1,
    curve_q2,
    curve_q2_tilde,
    quadratic_cover_components,
    quartic_g,
    surface_s1,
    surface_s2,
)
from .singular import (
    GenusReport,
    SingularPointRecord,
    blow_up_strict_transform,
    classify_singularity,
    genus,
    singular_locus_curve,
    surface_singular_lines,
)
from .intersect import apply_quadratic_cover, intersect_surfaces, jonquieres_normal_form
from .degenerate import degeneration_check
