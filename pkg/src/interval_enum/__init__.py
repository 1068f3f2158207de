"""Exact enumeration of interval graphs and checks of their counting bounds."""

from .bounds import double_factorial_odd, lower_bound, verify_identities, verify_sandwich
from .codec import ColoredGraph, ColoredIntervalSystem, InvalidCodeError, Permutation, decode, encode, realize
from .enumerator import CapacityError, CountsRecord, count_interval_graphs, enumerate_distinct, oracle_count_interval_graphs
from .graph import CanonicalForm, Graph, canonicalize, is_isomorphic
from .graph6 import Graph6Error, from_graph6, to_graph6
from .recognizer import RecognitionResult, has_asteroidal_triple, is_chordal, is_interval
from .representation import EndpointMatching, Interval, enumerate_matchings, enumerate_matchings_partitioned, intervals_to_graph

__version__ = "0.1.0"
