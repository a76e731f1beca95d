"""Exact comparators for the bi-orderings of Thompson's group F.

The group lives in :mod:`thompson_orders.element` as canonical dyadic
breakpoint maps; :mod:`thompson_orders.forder` implements sign and
comparison under every bi-ordering family; :mod:`thompson_orders.orderspace`
explores the metric space of orderings at desk scale; and
:mod:`thompson_orders.verify` packages the structural properties as
runnable suites.  ``thompson-orders`` is the command-line entry point.
"""

from .dyadic import (
    Cmp,
    DyadicRational,
    PowerOfTwo,
    QuadraticIrrational,
    Sign,
    parse_dyadic,
    parse_quadratic_irrational,
    quad_linear_sign,
)
from .element import (
    IDENTITY,
    X0,
    X1,
    FElement,
    SupportBounds,
    Word,
    commutator,
    compose,
    conjugate,
    embed_interval,
    from_breakpoints,
    from_word,
    inverse,
    parse_breakpoints,
    parse_element,
    parse_word,
    random_word,
    reflect,
)
from .errors import (
    BadEndpoints,
    BadInterval,
    IdentityInput,
    IdentityReference,
    NotDyadic,
    NotMonotone,
    NotPowerOfTwoSlope,
    OutOfRange,
    ParseError,
    RadiusTooLarge,
    ThompsonOrdersError,
)
from .forder import (
    FOrderSpec,
    FPrimeTag,
    IsolatedOrder,
    IsolatedTag,
    LambdaOrder,
    as_isolated,
    compare,
    conjugate_spec,
    conrad_demo_sign,
    conrad_direction,
    conrad_pairing_sign,
    extension_cone_member,
    format_order_spec,
    fprime_sign,
    isolated_specs,
    parse_order_spec,
    reflect_spec,
    restrict_to_fprime,
    sign,
    standard_grid,
)
from .orderspace import (
    Ball,
    Distance,
    IsolationWitness,
    ball,
    distance,
    isolation_witness,
    lambda_accumulation,
    sample_lambda_grid,
    sign_vector,
)
from .z2order import (
    Z2Irrational,
    Z2Order,
    Z2Rational,
    format_z2_order,
    parse_z2_order,
    separating_pair,
    z2_equal,
    z2_negate,
    z2_sign,
    z2_swap,
)

__version__ = "0.1.0"
