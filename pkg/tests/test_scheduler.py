import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from seemoo import nn
from seemoo.scheduler import (
    DQNAgent,
    DQNConfig,
    QNetwork,
    ReplayBuffer,
    RunHistory,
    Transition,
    compute_reward,
    dqn_loss,
    epsilon_at,
    extract_state,
    q_forward,
    select_action,
    td_targets,
)


def history_from(actions, igd, mse=None, dx=None, df=None, t_max=100):
    h = RunHistory(t_max=t_max)
    n = len(actions)
    dx = dx if dx is not None else [1.0] * (n + 1)
    df = df if df is not None else [1.0] * (n + 1)
    mse = mse if mse is not None else [0.1] * n
    h.start(igd[0], 0.0, dx[0], df[0])
    for t, a in enumerate(actions):
        h.record_step(a, igd[t + 1], 0.0, dx[t + 1], df[t + 1], mse[t])
    return h


def check_state_bounds(S):
    assert S.shape == (5, 8) and np.all(np.isfinite(S))
    assert np.all((S[:, [0, 1, 7]] >= 0) & (S[:, [0, 1, 7]] <= 1))
    assert np.all((S[:, 2:7] >= -1) & (S[:, 2:7] <= 1))


def test_initial_state_is_zero():
    h = RunHistory(t_max=100)
    h.start(1.0, 0.5, 2.0, 3.0)
    assert np.array_equal(extract_state(h), np.zeros((5, 8)))


def test_usage_features_example():
    # model 2 chosen 3 times overall and twice in the last five steps
    actions = [0, 0, 1, 2, 4, 3, 2, 1, 2, 4]
    h = history_from(actions, list(np.linspace(1, 0.5, 11)))
    S = extract_state(h)
    assert S[2, 0] == pytest.approx(0.3)
    assert S[2, 1] == pytest.approx(0.4)
    assert S[:, 0].sum() == pytest.approx(1.0)
    assert np.all(S[:, 7] == 0.1)


def test_progress_feature_at_end():
    h = history_from([0] * 4, [1.0, 0.9, 0.8, 0.8, 0.7], t_max=4)
    assert np.all(extract_state(h)[:, 7] == 1.0)


def test_per_model_features_need_two_observations():
    h = history_from([1, 0], [1.0, 0.8, 0.6], mse=[0.2, 0.3])
    S = extract_state(h)
    assert S[1, 2] == 0.0 and S[1, 6] == 0.0 and S[0, 2] == 0.0
    h = history_from([1, 0, 1], [1.0, 0.8, 0.6, 0.5], mse=[0.2, 0.3, 0.1])
    S = extract_state(h)
    # model 1: IGD 0.8 then 0.5 with extrema over its own activations
    assert S[1, 2] == pytest.approx((0.8 - 0.5) / (0.8 - 0.5))
    assert S[1, 6] == pytest.approx((0.2 - 0.1) / (0.2 - 0.1))
    assert S[0, 2] == 0.0


def test_global_and_density_features():
    dx = [4.0, 3.0, 2.5, 2.6]
    h = history_from([0, 1, 2], [1.0, 0.9, 0.6, 0.7], dx=dx)
    S = extract_state(h)
    assert np.all(S[:, 3] == pytest.approx((0.6 - 0.7) / (1.0 - 0.6)))
    deltas = [1.0, 0.5, -0.1]
    assert np.all(S[:, 4] == pytest.approx((2.5 - 2.6) / (max(deltas) - min(deltas))))
    assert np.all(S[:, 5] == 0.0)  # constant D_F


def test_reward_examples():
    h = history_from([0, 0], [0.9, 0.5, 0.4])
    assert compute_reward("igd", h) == pytest.approx(0.2)
    assert compute_reward("binary", h) == 1.0
    h = history_from([0], [0.5, 0.5])
    assert compute_reward("binary", h) == 0.0 and compute_reward("igd", h) == 0.0
    h = RunHistory(t_max=10)
    h.start(1.0, 0.2, 1.0, 1.0)
    h.record_step(0, 0.9, 0.2, 1.0, 1.0, 0.1)
    assert compute_reward("hv", h) == 0.0
    h.record_step(0, 0.8, 0.6, 1.0, 1.0, 0.1)
    assert compute_reward("hv", h) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        compute_reward("nope", h)


@settings(max_examples=60, deadline=None)
@given(
    actions=st.lists(st.integers(0, 4), min_size=1, max_size=40),
    seed=st.integers(0, 2**31 - 1),
)
def test_state_and_reward_bounds_on_random_histories(actions, seed):
    rng = np.random.default_rng(seed)
    n = len(actions)
    igd = list(rng.random(n + 1) * 3)
    h = RunHistory(t_max=40)
    h.start(igd[0], rng.random(), rng.random(), rng.random())
    check_state_bounds(extract_state(h))
    for t, a in enumerate(actions):
        h.record_step(a, igd[t + 1], rng.random(), rng.random() * 5, rng.random() * 5, rng.random())
        check_state_bounds(extract_state(h))
        assert -1 <= compute_reward("igd", h) <= 1
        assert -1 <= compute_reward("hv", h) <= 1
        assert compute_reward("binary", h) in (0.0, 1.0)
    assert h.counts.sum() == h.t == n


def test_zero_network_gives_zero_q():
    net = QNetwork(rng=np.random.default_rng(0))
    for p in net.parameters():
        p.data[...] = 0.0
    assert np.array_equal(q_forward(net, np.zeros((5, 8))), np.zeros(5))


def test_q_equivariance_and_symmetry():
    rng = np.random.default_rng(1)
    for rectifier in (True, False):
        net = QNetwork(rectifier=rectifier, rng=np.random.default_rng(2))
        for _ in range(20):
            S = rng.normal(size=(5, 8))
            perm = rng.permutation(5)
            np.testing.assert_allclose(q_forward(net, S[perm]), q_forward(net, S)[perm], atol=1e-10)
        row = rng.normal(size=8)
        q = q_forward(net, np.tile(row, (5, 1)))
        assert np.allclose(q, q[0], atol=1e-12)


def test_q_rejects_non_finite_state():
    S = np.zeros((5, 8))
    S[1, 3] = np.nan
    with pytest.raises(ValueError):
        q_forward(QNetwork(), S)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**31 - 1))
def test_rectified_q_non_negative(seed):
    rng = np.random.default_rng(seed)
    net = QNetwork(rng=rng)
    q = net(rng.normal(size=(4, 5, 8)) * 3).data
    assert q.shape == (4, 5) and np.all(q >= 0)


def test_select_action_examples():
    rng = np.random.default_rng(0)
    assert select_action([0.1, 0.9, 0.3, 0.2, 0.0], 0.0, rng) == 1
    assert select_action([0.1, 0.2, 0.9, 0.3, 0.9], 0.0, rng) == 2
    counts = np.bincount([select_action(np.zeros(5), 1.0, rng) for _ in range(100_000)], minlength=5)
    assert np.all(np.abs(counts / 100_000 - 0.2) <= 0.03 * 0.2)
    with pytest.raises(ValueError):
        select_action(np.zeros(5), 1.5, rng)


def test_select_action_respects_mask():
    rng = np.random.default_rng(3)
    mask = [False, True, True, True, True]
    picks = {select_action(np.array([9.0, 0, 0, 0, 0]), 0.5, rng, mask) for _ in range(500)}
    assert 0 not in picks and picks == {1, 2, 3, 4}


def test_select_action_advances_stream_identically():
    a, b = np.random.default_rng(4), np.random.default_rng(4)
    select_action(np.zeros(5), 0.0, a)
    select_action(np.zeros(5), 1.0, b)
    assert a.random() == b.random()


def test_epsilon_schedule():
    assert epsilon_at(0, 101) == pytest.approx(0.8)
    assert epsilon_at(100, 101) == pytest.approx(0.01)
    assert epsilon_at(50, 101) == pytest.approx(0.405)
    assert epsilon_at(500, 101) == pytest.approx(0.01)
    with pytest.raises(ValueError):
        epsilon_at(0, 0)


def test_replay_examples():
    buf = ReplayBuffer(256)
    items = [Transition(np.zeros((5, 8)), i % 5, 0.0, np.zeros((5, 8)), False) for i in range(300)]
    for tr in items:
        buf.push(tr)
    assert len(buf) == 256 and next(iter(buf)) is items[44]
    small = ReplayBuffer(256)
    for tr in items[:40]:
        small.push(tr)
    assert len({id(x) for x in small.sample(32, np.random.default_rng(0))}) == 32
    tiny = ReplayBuffer(256)
    for tr in items[:10]:
        tiny.push(tr)
    draws = tiny.sample(32, np.random.default_rng(0))
    assert len(draws) == 32 and len({id(x) for x in draws}) <= 10
    with pytest.raises(RuntimeError):
        ReplayBuffer().sample(1, np.random.default_rng(0))


def _transition(rng, reward=0.5, terminal=False, action=2):
    return Transition(rng.random((5, 8)), action, reward, rng.random((5, 8)), terminal)


def test_gamma_zero_loss_is_squared_error():
    rng = np.random.default_rng(5)
    agent = DQNAgent(DQNConfig(gamma=0.0), np.random.default_rng(6))
    tr = _transition(rng, reward=0.3)
    q = agent.q_values(tr.state)[tr.action]
    targets = td_targets(agent.target, [tr], 0.0)
    assert targets[0] == 0.3
    assert dqn_loss(agent.net, [tr], targets).item() == pytest.approx((q - 0.3) ** 2, rel=1e-12)


def test_terminal_target_is_reward():
    rng = np.random.default_rng(7)
    agent = DQNAgent(DQNConfig(rectifier=False), np.random.default_rng(8))
    tr = _transition(rng, reward=-0.4, terminal=True)
    assert td_targets(agent.target, [tr], 0.9)[0] == -0.4
    live = _transition(rng, reward=-0.4)
    expected = -0.4 + 0.9 * agent.target(live.next_state).data.max()
    assert td_targets(agent.target, [live], 0.9)[0] == pytest.approx(expected)


def _fixed_transition_run(rectifier, steps=300):
    rng = np.random.default_rng(9)
    tr = _transition(rng, reward=0.7)
    seed = 10
    if rectifier:
        # start from a live unit: a rectified Q at exactly 0 has zero gradient
        while DQNAgent(DQNConfig(), np.random.default_rng(seed)).q_values(tr.state)[tr.action] <= 0:
            seed += 1
    agent = DQNAgent(DQNConfig(gamma=0.0, lr=1e-3, rectifier=rectifier), np.random.default_rng(seed))
    losses = [agent.update([tr]) for _ in range(steps)]
    return agent, tr, np.array(losses)


@pytest.mark.parametrize("rectifier", [False, True])
def test_repeated_update_converges_to_reward(rectifier):
    agent, tr, losses = _fixed_transition_run(rectifier)
    assert losses[-1] < 1e-8
    assert abs(agent.q_values(tr.state)[tr.action] - 0.7) < 1e-4
    assert agent.n_updates == 300


@pytest.mark.xfail(strict=True, reason="Adam momentum overshoots on a single fixed target; the loss "
                   "oscillates above 1e-6 until roughly step 100 before settling")
def test_repeated_update_loss_monotone_after_ten_steps():
    _, _, losses = _fixed_transition_run(False)
    assert np.all(np.diff(losses[10:]) <= 1e-6)


def test_target_network_sync_every_ten_updates():
    rng = np.random.default_rng(11)
    agent = DQNAgent(DQNConfig(target_sync=10, rectifier=False), np.random.default_rng(12))
    batch = [_transition(rng) for _ in range(4)]
    for i in range(1, 21):
        agent.update(batch)
        same = all(np.array_equal(a.data, b.data)
                   for a, b in zip(agent.net.parameters(), agent.target.parameters()))
        assert same == (i % 10 == 0)


def test_observe_waits_for_warmup():
    rng = np.random.default_rng(13)
    agent = DQNAgent(DQNConfig(), np.random.default_rng(14))
    results = [agent.observe(_transition(rng), rng) for _ in range(40)]
    assert all(r is None for r in results[:31]) and all(r is not None for r in results[31:])
    assert agent.n_updates == 9


def test_non_finite_loss_is_skipped():
    rng = np.random.default_rng(15)
    agent = DQNAgent(DQNConfig(), np.random.default_rng(16))
    bad = Transition(rng.random((5, 8)), 0, float("nan"), rng.random((5, 8)), True)
    before = [p.data.copy() for p in agent.net.parameters()]
    assert np.isnan(agent.update([bad]))
    assert agent.n_skipped == 1
    assert all(np.array_equal(a, p.data) for a, p in zip(before, agent.net.parameters()))


@pytest.mark.parametrize("rectifier", [True, False])
def test_td_loss_gradient_matches_finite_differences(rectifier):
    rng = np.random.default_rng(17)
    net = QNetwork(rectifier=rectifier, rng=np.random.default_rng(18))
    batch = [_transition(rng, reward=r, action=a) for r, a in zip(rng.random(6), rng.integers(0, 5, 6))]
    targets = rng.random(6)
    err = nn.grad_check(net, batch, targets, loss_fn=lambda m, b, y: dqn_loss(m, b, y))
    assert err < 1e-4


def test_agent_updates_are_deterministic():
    def run():
        rng = np.random.default_rng(19)
        agent = DQNAgent(DQNConfig(), np.random.default_rng(20))
        for _ in range(50):
            agent.observe(_transition(rng, reward=float(rng.random())), rng)
        return [p.data.copy() for p in agent.net.parameters()]
    for a, b in zip(run(), run()):
        assert np.array_equal(a, b)
