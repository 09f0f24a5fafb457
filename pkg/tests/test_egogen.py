import numpy as np
import pytest

from src.core.errors import InstanceFormatError, ParameterError
from src.core.network import Layer
from src.egogen.generator import (
    apportion_layers,
    generate_conflict_graph,
    generate_ego_network,
    sample_network_sizes,
    scale_network,
)
from src.egogen.layers import DEFAULT_LAYER_STATS, LayerStats, NetworkSizeModel
from src.egogen.serialization import dump_instance, load_instance, read_instance, write_instance


@pytest.mark.parametrize("n, expected", [
    (132, [4, 10, 118]),
    (3, [1, 1, 1]),
    (4, [1, 1, 2]),
])
def test_apportion_layers(n, expected):
    assert apportion_layers(n) == expected


def test_layer_stats_expected_capacity():
    stats = DEFAULT_LAYER_STATS
    assert stats.marginal_sizes == pytest.approx((4.6, 9.7, 118.2))
    assert stats.expected_capacity() == pytest.approx(4.6 * 74.0 + 9.7 * 38.72 + 118.2 * 8.81)


def test_layer_stats_must_nest():
    with pytest.raises(ParameterError):
        LayerStats(cumulative_size_means=(5.0, 4.0, 100.0))


def test_generation_is_deterministic():
    first = generate_ego_network(7, size_override=40)
    second = generate_ego_network(7, size_override=40)
    assert first == second
    assert first != generate_ego_network(8, size_override=40)


def test_generated_network_is_ordered_by_layer():
    network = generate_ego_network(3, size_override=132)
    assert network.ids == tuple(range(132))
    assert network.layer_sizes() == {Layer.SUPPORT: 4, Layer.SYMPATHY: 10, Layer.ACTIVE: 118}
    layers = [alter.layer for alter in network]
    assert layers == sorted(layers, key=[Layer.SUPPORT, Layer.SYMPATHY, Layer.ACTIVE].index)


def test_zero_sigma_uses_layer_means():
    network = generate_ego_network(1, size_override=10, demand_sigma=0.0)
    hours = DEFAULT_LAYER_STATS.hours_by_layer()
    assert all(alter.annual_demand == hours[alter.layer] for alter in network)


def test_capacity_of_a_mid_sized_network():
    network = generate_ego_network(11, size_override=132, demand_sigma=0.0)
    assert network.baseline_capacity == pytest.approx(1752.0, rel=0.05)


def test_network_size_bounds():
    with pytest.raises(ParameterError):
        generate_ego_network(0, size_override=2)
    with pytest.raises(ParameterError):
        generate_ego_network(0, size_override=10, demand_sigma=-0.1)


def test_size_distribution_matches_percentiles():
    sizes = sample_network_sizes(2024, 10_000)
    assert sizes.min() >= 20 and sizes.max() <= 250
    p10, median, p90 = np.percentile(sizes, [10, 50, 90])
    assert p10 == pytest.approx(68, rel=0.15)
    assert median == pytest.approx(126, rel=0.15)
    assert p90 == pytest.approx(170, rel=0.15)


def test_size_model_rejects_unordered_percentiles():
    with pytest.raises(ParameterError):
        NetworkSizeModel(p10=130.0, median=126.0, p90=170.0)


@pytest.mark.parametrize("n, density, edges", [
    (10, 0.0, 0),
    (10, 0.2, 9),
    (10, 1.0, 45),
    (68, 0.4, 911),
])
def test_conflict_graph_edge_count(n, density, edges):
    graph = generate_conflict_graph(11, n, density)
    assert len(graph.edges) == edges
    assert all(0 <= i < j < n for i, j in graph.edges)


def test_conflict_graph_is_seeded():
    assert generate_conflict_graph(5, 30, 0.3) == generate_conflict_graph(5, 30, 0.3)
    assert generate_conflict_graph(5, 30, 0.3) != generate_conflict_graph(6, 30, 0.3)


@pytest.mark.parametrize("density", [-0.1, 1.2])
def test_conflict_density_range(density):
    with pytest.raises(ParameterError, match="density"):
        generate_conflict_graph(0, 10, density)


def test_scale_network_hits_target_capacity():
    scaled = scale_network(generate_ego_network(9, size_override=117), 1288.0)
    assert scaled.baseline_capacity == pytest.approx(1288.0)
    assert len(scaled) == 117


def test_instance_text_round_trip(tmp_path):
    network = generate_ego_network(4, size_override=12)
    conflicts = generate_conflict_graph(4, 12, 0.3)
    path = tmp_path / "instance.txt"
    write_instance(path, network, conflicts)
    assert read_instance(path) == (network, conflicts)
    assert dump_instance(*read_instance(path)) == path.read_text(encoding="utf-8")


@pytest.mark.parametrize("text, message", [
    ("alter 0 support 10.0\n", "missing n="),
    ("n=2\nalter 0 support 10.0\n", "header says n=2"),
    ("n=1\nalter 0 nowhere 10.0\n", "nowhere"),
    ("n=1\nalter 0 support 10.0\nvertex 1 2\n", "unexpected line"),
])
def test_malformed_instance_text(text, message):
    with pytest.raises(InstanceFormatError, match=message):
        load_instance(text, "bad.txt")
