"""k-cordial labelings of p-uniform hypertrees.

A thin wrapper over the C++ extension module. The heavy lifting (validation,
the constructive labeler, the exhaustive search, enumeration) happens in C++;
this package adds dict-returning conveniences on top.
"""

import json as _json

from ._hypercordial import (
    BruteForceResult,
    ConstructionResult,
    EdgeLabelSummary,
    Hypertree,
    HypercordialError,
    LeafEdgeDecomposition,
    SearchStatus,
    SubsetSumWitness,
    VertexLabeling,
    attach_edge,
    brute_force_label,
    canonical_form,
    distinct_subset_sum,
    distinct_subset_sum_avoiding,
    enumerate_hypertrees,
    explore_conjecture_json,
    find_removable_leaf_edge,
    induced_edge_labels,
    is_k_cordial_labeling,
    is_k_friendly,
    isomorphic,
    label_hypertree,
    labeling_json_text,
    oracle_subset_sum,
    random_hypertree,
    read_hypertree_blocks,
    read_hypertree_text,
    remove_leaf_edge,
    theorem_applies,
    verify_witness,
    write_hypertree_text,
)

__version__ = "0.1.0"


def labeling_summary(tree, labeling):
    """Labeling report as a dict: labels, edge labels, histograms, verdicts."""
    return _json.loads(labeling_json_text(tree, labeling))


def explore_conjecture(p, m, k, budget=50_000_000, jobs=1):
    """Brute-force cordiality sweep; each of p, m, k is an (lo, hi) pair.

    Returns the report as a dict with per-(p, m, k) cell counts and any
    counterexamples serialized in hypertree text form.
    """
    p_lo, p_hi = p
    m_lo, m_hi = m
    k_lo, k_hi = k
    return _json.loads(
        explore_conjecture_json(p_lo, p_hi, m_lo, m_hi, k_lo, k_hi, budget, jobs)
    )


__all__ = [
    "BruteForceResult",
    "ConstructionResult",
    "EdgeLabelSummary",
    "Hypertree",
    "HypercordialError",
    "LeafEdgeDecomposition",
    "SearchStatus",
    "SubsetSumWitness",
    "VertexLabeling",
    "attach_edge",
    "brute_force_label",
    "canonical_form",
    "distinct_subset_sum",
    "distinct_subset_sum_avoiding",
    "enumerate_hypertrees",
    "explore_conjecture",
    "explore_conjecture_json",
    "find_removable_leaf_edge",
    "induced_edge_labels",
    "is_k_cordial_labeling",
    "is_k_friendly",
    "isomorphic",
    "label_hypertree",
    "labeling_json_text",
    "labeling_summary",
    "oracle_subset_sum",
    "random_hypertree",
    "read_hypertree_blocks",
    "read_hypertree_text",
    "remove_leaf_edge",
    "theorem_applies",
    "verify_witness",
    "write_hypertree_text",
]
