from .graph import SignedGraph, SwitchingFunction, SubBipartition, BalanceResult
from .measure import VertexMeasure
from .spectrum import Spectrum
from .cheeger import CheegerCertificate, FrustrationResult, SweepResult
from .clustering import Embedding, NormalizedEmbedding, PartitionResult, ClusterDiagnostics, ClusterResult
