"""Ontology-backed research-paper recommender: Python surface of the C++ core."""

from ontorec._core import (
    DataError,
    KnowledgeBase,
    NotFoundError,
    StateError,
    compute_profile,
    default_relation_weights,
    identify_cop,
    new_system_profile,
    new_user_profile,
    porter_stem,
    profile_error_rate,
    profile_precision,
    recommend,
    tokenize_and_stem,
    top_topics,
)

__all__ = [
    "DataError",
    "KnowledgeBase",
    "NotFoundError",
    "StateError",
    "compute_profile",
    "default_relation_weights",
    "identify_cop",
    "new_system_profile",
    "new_user_profile",
    "porter_stem",
    "profile_error_rate",
    "profile_precision",
    "recommend",
    "tokenize_and_stem",
    "top_topics",
]
