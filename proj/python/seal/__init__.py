"""Python bindings for the SEAL injection-defense pipeline."""

from ._seal import *  # noqa: F401,F403
from ._seal import __doc__  # noqa: F401

#: Stacked-statement payload that promotes User1 to T2 through the
#: interpolating trust query.
TRUST_ESCALATION_PAYLOAD = (
    "'; UPDATE users SET Trust = 'T2' WHERE Username = 'User1'; SELECT 1; --"
)
