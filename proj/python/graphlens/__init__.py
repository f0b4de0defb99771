"""Exhaustive property/type profiling for schemaless property graphs.

The heavy lifting lives in the compiled ``_graphlens`` extension; this
package adds small conveniences that return parsed dictionaries instead
of JSON text.
"""

import json as _json

from ._graphlens import (
    Graph,
    GraphlensError,
    find_inconsistencies,
    generate,
    inspect_nodes_json,
    inspect_relationships_json,
    load_csv,
    load_jsonl,
    run_benchmark_csv,
    summarize,
    write_jsonl,
)

__all__ = [
    "Graph",
    "GraphlensError",
    "find_inconsistencies",
    "generate",
    "inspect_nodes",
    "inspect_nodes_json",
    "inspect_relationships",
    "inspect_relationships_json",
    "load_csv",
    "load_jsonl",
    "run_benchmark_csv",
    "summarize",
    "write_jsonl",
]


def inspect_nodes(graph, **kwargs):
    """Profile node properties; returns the report as nested dicts."""
    return _json.loads(inspect_nodes_json(graph, **kwargs))


def inspect_relationships(graph, **kwargs):
    """Profile relationship properties; returns the report as nested dicts."""
    return _json.loads(inspect_relationships_json(graph, **kwargs))
