"""Maximal dissociation set enumeration, generators and verification suites."""

import json

from ._dissoc import (
    ENGINE_VERSION,
    CapExceeded,
    Graph,
    U_pq,
    U_rt,
    enumerate_mds,
    extremal_trees,
    extremal_unicyclic,
    family,
    generate_caterpillars,
    generate_trees,
    generate_unicyclic,
    is_dissociation,
    mds_profile,
    phi,
    phi_refined,
    spider_T,
    tree_code,
    unicyclic_code,
)
from . import _dissoc


def _report(text):
    return json.loads(text)[0]


def check_main_theorem(n, jobs=1):
    return _report(_dissoc._check_main_theorem(n, jobs))


def check_tree_theorem(n, jobs=1):
    return _report(_dissoc._check_tree_theorem(n, jobs))


def check_cycle_lemma(n_min, n_max, jobs=1):
    return _report(_dissoc._check_cycle_lemma(n_min, n_max, jobs))


def check_surgery_lemma(order_cap, k_max=3, jobs=1):
    return _report(_dissoc._check_surgery_lemma(order_cap, k_max, jobs))


def check_pendant_path_lemma(n, jobs=1):
    return _report(_dissoc._check_pendant_path_lemma(n, jobs))


def check_case3_subcases(n, jobs=1):
    return _report(_dissoc._check_case3_subcases(n, jobs))


__all__ = [
    "ENGINE_VERSION",
    "CapExceeded",
    "Graph",
    "U_pq",
    "U_rt",
    "check_case3_subcases",
    "check_cycle_lemma",
    "check_main_theorem",
    "check_pendant_path_lemma",
    "check_surgery_lemma",
    "check_tree_theorem",
    "enumerate_mds",
    "extremal_trees",
    "extremal_unicyclic",
    "family",
    "generate_caterpillars",
    "generate_trees",
    "generate_unicyclic",
    "is_dissociation",
    "mds_profile",
    "phi",
    "phi_refined",
    "spider_T",
    "tree_code",
    "unicyclic_code",
]
