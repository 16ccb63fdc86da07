"""Plane graphs with pentagonal faces: validation, regions, chords,
constructions and exhaustive enumeration."""

from .chords import Chord, CycleUnder, FaceStar, cycle_under, face_star, is_minimal_chord, k_chords, short_chord_census
from .constructions import FamilyParams, build_extremal, build_named, extremal_fixture, fixture
from .enumeration import (
    CapExceeded,
    EnumerationConfig,
    Filters,
    VerificationReport,
    enumerate_pentagulations,
    verify_theorems,
)
from .io import ParseError, load, loads, save
from .lemmas import LemmaReport, lemma_suite
from .metrics import bfs, diameter, distance_matrix, girth, max_degree
from .plane import (
    CanonicalCode,
    GraphCheckReport,
    PlaneGraph,
    PlaneGraphError,
    build_graph,
    canonical_code,
    check_graph,
    is_pentagulation,
    marked_face_code,
    trace_faces,
)
from .regions import (
    RegionPartition,
    dislocated_pairs,
    dominates,
    find_cycles,
    four_cycle_structure,
    is_jordan_separating,
    partition_by_cycle,
)

__version__ = "0.1.0"
