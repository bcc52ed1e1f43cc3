"""Prime graphs of alternating and symmetric groups and OD-characterization checks."""

import json

from ._odkit import (
    DomainError,
    GroupExpr,
    NonQualifyingError,
    ParseError,
    ResourceError,
    is_prime,
    legendre_exponent,
    partition_count,
    partitions,
    prime_count,
    primes_up_to,
)
from . import _odkit

__all__ = [
    "DomainError",
    "GroupExpr",
    "NonQualifyingError",
    "ParseError",
    "ResourceError",
    "check_candidate",
    "degree_pattern",
    "dot",
    "graph",
    "is_prime",
    "legendre_exponent",
    "od_class",
    "order",
    "partition_count",
    "partitions",
    "prime_count",
    "primes_up_to",
    "same_od",
    "search",
    "verify",
]

_DEFAULT_SIEVE_LIMIT = 20_000_000


def _expr(e):
    return GroupExpr.parse(e) if isinstance(e, str) else e


def graph(expr, sieve_limit=_DEFAULT_SIEVE_LIMIT):
    """Return {"vertices": [...], "edges": [[p, q], ...]}."""
    return json.loads(_odkit._graph_json(_expr(expr), sieve_limit))


def degree_pattern(expr, sieve_limit=_DEFAULT_SIEVE_LIMIT):
    """Return {"primes": [...], "degrees": [...]}."""
    return json.loads(_odkit._degree_pattern_json(_expr(expr), sieve_limit))


def order(expr, sieve_limit=_DEFAULT_SIEVE_LIMIT):
    """Return the factored order as {prime: exponent}."""
    j = json.loads(_odkit._order_json(_expr(expr), sieve_limit))
    return {f["prime"]: f["exponent"] for f in j["factors"]}


def check_candidate(alpha):
    return json.loads(_odkit._candidate_json(alpha))


def search(max_alpha):
    return json.loads(_odkit._search_json(max_alpha))


def verify(alpha, sieve_limit=_DEFAULT_SIEVE_LIMIT):
    return json.loads(_odkit._verify_json(alpha, sieve_limit))


def od_class(alpha, family="alt"):
    return json.loads(_odkit._od_class_json(alpha, family))["members"]


def same_od(a, b, sieve_limit=_DEFAULT_SIEVE_LIMIT):
    """True when both groups have the same order and degree pattern."""
    return _odkit.same_od(_expr(a), _expr(b), sieve_limit)


def dot(expr, sieve_limit=_DEFAULT_SIEVE_LIMIT):
    return _odkit.dot(_expr(expr), sieve_limit)
