"""Structural invariants of the monoid of nonnegative solutions of
``a1*x1 + ... + a_{r-1}*x_{r-1} = 0 (mod a_r)``.

>>> from diophmon import normalize_equation, apery_box, class_group
>>> M = normalize_equation([4, 5, 7])
>>> apery_box(M).elements
((0, 0), (1, 2), (2, 4), (3, 6), (4, 1), (5, 3), (6, 5))
>>> print(class_group(M))
Z7
"""
from .apery import (
    DEFAULT_GUARD,
    AperyTable,
    apery_box,
    apery_closed_form,
    bar_multiple,
    carry,
    oplus,
    reduce,
)
from .class_groups import (
    ProductIdentity,
    class_group,
    inner_class_group,
    phi,
    two_dim_closed_form,
    verify_product_identity,
)
from .decompose import (
    Decomposition,
    ElliottRepresentation,
    ElliottScheme,
    decompose,
    elliott_decompose,
    elliott_recompose,
    elliott_scheme,
    recompose,
)
from .errors import DiophMonError
from .exact_arith import (
    FiniteAbelianGroup,
    Rational,
    group_from_quotient,
    mod_inverse,
    smith_normal_form,
)
from .hilbert import HilbertBasis, hilbert_basis
from .monoid import (
    CaleData,
    EquationSpec,
    cale_data,
    contains,
    lambda_denominator,
    lambda_denominators,
    lift,
    max_ray_lambda,
    normalize_equation,
    project,
    ray_lambda,
    rays,
)

__version__ = "0.1.0"
