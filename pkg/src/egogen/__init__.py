from src.egogen.generator import (
    apportion_layers,
    generate_conflict_graph,
    generate_ego_network,
    sample_network_sizes,
    scale_network,
)
from src.egogen.layers import DEFAULT_LAYER_STATS, DEFAULT_SIZE_MODEL, LayerStats, NetworkSizeModel
from src.egogen.serialization import dump_instance, load_instance, read_instance, write_instance

__all__ = [
    "DEFAULT_LAYER_STATS",
    "DEFAULT_SIZE_MODEL",
    "LayerStats",
    "NetworkSizeModel",
    "apportion_layers",
    "dump_instance",
    "generate_conflict_graph",
    "generate_ego_network",
    "load_instance",
    "read_instance",
    "sample_network_sizes",
    "scale_network",
    "write_instance",
]
