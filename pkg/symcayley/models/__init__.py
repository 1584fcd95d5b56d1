from .model import Model, render_rows
from .partition import Partition, Node, enumerate_partitions, partition_number
from .permutation import Permutation, ClassSpec, compose, inverse, cycle_type, class_size
from .adjacency import AdjacencyMatrix
from .character_table import CharacterTable, OrthogonalityReport
from .spectrum import SpectrumLine, SpectrumReport, EnergyBounds, IdentityCheck
from .verdict import Verdict, VerificationResult
