"""
Project enums
"""

import enum


class FamilyId(enum.Enum):
    """
    Graph families known to the generator
    """
    Complete = 'complete'
    Cycle = 'cycle'
    Path = 'path'
    Empty = 'empty'
    Star = 'star'
    CompleteBipartite = 'complete-bipartite'
    Petersen = 'petersen'
    Gnp = 'gnp'
    Sharpness1 = 'sharpness1'
    Sharpness2 = 'sharpness2'


class SequenceKind(enum.Enum):
    """
    Hamilton sequence kinds
    """
    Path = 'path'
    Cycle = 'cycle'


class Conclusion(enum.Enum):
    """
    Properties a theorem concludes
    """
    Hamiltonian = 'hamiltonian'
    Traceable = 'traceable'
    HamiltonianConnected = 'hamiltonian-connected'


class TheoremId(enum.Enum):
    """
    Sufficient conditions registered for verification
    """
    Dirac = 'dirac'
    Ore = 'ore'
    McDiarmidYolov = 'mcdiarmid-yolov'
    OreHC = 'ore-hc'
    ZhouHC = 'zhou-hc'
    OreHole = 'ore-hole'
    OreHoleTrace = 'ore-hole-trace'
    OreHoleHC = 'ore-hole-hc'


class OutputFormat(enum.Enum):
    """
    CLI output formats
    """
    Json = 'json'
    Text = 'text'


class HamiltonMode(enum.Enum):
    """
    hamilton subcommand modes
    """
    Cycle = 'cycle'
    Path = 'path'
    Connected = 'connected'
    Traceable = 'traceable'
