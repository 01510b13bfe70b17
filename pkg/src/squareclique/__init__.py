"""Cliques in squares of 2-degenerate graphs: exact tools and the nice-triple pipeline."""

from .clique import CliqueResult, max_clique, max_clique_oracle
from .constructions import TightInstance, build_hub_gadget, build_tight, gadget_sizes, random_2degenerate
from .degeneracy import (DegeneracyCertificate, Density, degeneracy, degeneracy_order, mad, mad_oracle,
                         verify_order)
from .errors import (BudgetExhausted, DomainError, GraphError, ParameterError, ParseError,
                     PreconditionError, SizeError)
from .graph import (Graph, Multigraph, VertexOrder, complement, induced_subgraph, parse_graph,
                    parse_vertex_list, read_graph, relabel, serialize_graph, serialize_vertex_list,
                    underlying_simple, write_graph)
from .hstar import (D0, HStar, JStar, PairStats, Partition, build_hstar, build_jstar, claim_diagnostics,
                    enumerate_integer_solutions, pair_statistics, partition)
from .nice import (ExtractionResult, NicenessReport, TokenLedger, classify, extract,
                   prune_to_clique_support, run_token_pass, verify_nice)
from .square import is_clique_in_square, non_adjacent_pair_in_square, square, square_neighbors

__all__ = [name for name in dir() if not name.startswith("_")]
