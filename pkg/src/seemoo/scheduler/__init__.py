"""Reinforcement-learning scheduler over the surrogate pool."""

from .dqn import DQNAgent, DQNConfig, dqn_loss, td_targets
from .policy import EPS_END, EPS_START, epsilon_at, select_action
from .qnet import QNetwork, q_forward
from .replay import ReplayBuffer, Transition
from .state import (
    N_FEATURES,
    REWARD_KINDS,
    RunHistory,
    compute_reward,
    extract_state,
    mean_pairwise_distance,
)

__all__ = [
    "DQNAgent", "DQNConfig", "dqn_loss", "td_targets", "EPS_END", "EPS_START",
    "epsilon_at", "select_action", "QNetwork", "q_forward", "ReplayBuffer",
    "Transition", "N_FEATURES", "REWARD_KINDS", "RunHistory", "compute_reward",
    "extract_state", "mean_pairwise_distance",
]
