#include "azpp/engine.hpp"

#include <algorithm>

namespace azpp {

namespace {

// Effective memory capacity: the memory extension gates temporal depth; with
// the flag off every agent runs a length-1 window (instantaneous perception).
int effective_memory(const SimConfig& c, const std::optional<int>& override_m) {
    if (!c.ext.memory) return 1;
    return override_m.value_or(c.memory_length);
}

// Validate before any member construction so rejection messages name the
// offending key instead of surfacing as a bare invalid_argument.
const SimConfig& validated(const SimConfig& c) {
    validate_config(c);
    return c;
}

}  // namespace

Model::Model(const SimConfig& config)
    : config_(validated(config)),
      grid_(config.grid_width, config.grid_height),
      ties_(config.n_agents),
      env_rng_(make_stream(config.master_seed, StreamRole::Environment)),
      shock_rng_(make_stream(config.master_seed, StreamRole::Shock)) {
    const int n = config_.n_agents;
    agent_rngs_.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        agent_rngs_.push_back(make_stream(config_.master_seed, StreamRole::Agent,
                                          static_cast<uint64_t>(i)));

    profiles_.reserve(static_cast<size_t>(n));
    states_.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const AgentOverride* ov = nullptr;
        if (auto it = config_.agents.find(i); it != config_.agents.end()) ov = &it->second;

        AgentProfile p;
        p.agent_id = i;
        // agent 0 is the parable's immobile observer unless overridden
        p.mobile = ov && ov->mobile ? *ov->mobile : (i != 0);
        if (ov && ov->age) {
            p.age = *ov->age;
        } else {
            p.age = std::clamp(agent_rngs_[static_cast<size_t>(i)].gaussian(config_.age_mean,
                                                                            config_.age_sd),
                               18.0, 100.0);
        }
        p.gamma = impulse_control_from_age(p.age);
        p.memory_length = ov && ov->memory_length ? *ov->memory_length : config_.memory_length;
        p.sampling_radius = config_.sampling_radius;
        p.flight_threshold = config_.p_flight;
        p.theta_base = config_.theta_base;
        profiles_.push_back(p);

        CognitiveState s(effective_memory(config_, ov && ov->memory_length
                                                       ? ov->memory_length
                                                       : std::optional<int>{}));
        if (ov && ov->x) {
            s.position = {*ov->x, *ov->y};
        } else {
            s.position = {agent_rngs_[static_cast<size_t>(i)].index(config_.grid_width),
                          agent_rngs_[static_cast<size_t>(i)].index(config_.grid_height)};
        }
        states_.push_back(std::move(s));
    }
    last_observations_.assign(static_cast<size_t>(n), 0.0);
    last_stimuli_.assign(static_cast<size_t>(n), 0.0);
}

void Model::apply_shock(long tick) {
    if (!config_.ext.shocks) return;
    if (tick % config_.shock.period != 0) return;
    for (auto& s : states_) {
        double bump = config_.shock.magnitude;
        if (config_.shock.mode == ShockMode::PerAgentRandom)
            bump = shock_rng_.uniform() * config_.shock.magnitude;
        s.affect = std::min(1.0, s.affect + bump);
    }
}

MetricsFrame Model::step() {
    const long t = tick_ + 1;
    const int n = config_.n_agents;

    // (1)-(2) environment
    seed_attacks(grid_, config_.env.attack_rate, env_rng_);
    extinguish(grid_, config_.env.extinction_rate, env_rng_);

    // scripted threat forcing (scenario machinery, off by default); applied
    // before perception so the pulse window is exact
    if (config_.pulse.enabled && t >= config_.pulse.start && t <= config_.pulse.end) {
        for (int y = config_.pulse.y; y < config_.pulse.y + config_.pulse.height; ++y)
            for (int x = config_.pulse.x; x < config_.pulse.x + config_.pulse.width; ++x)
                if (grid_.at(x, y) == PatchState::Calm) grid_.set(x, y, PatchState::Active);
    }

    // cross-agent reads below use last tick's committed state
    std::vector<double> prev_solo(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        prev_solo[static_cast<size_t>(i)] =
            states_[static_cast<size_t>(i)].affect + states_[static_cast<size_t>(i)].probability;

    // (3) perceive
    for (int i = 0; i < n; ++i) {
        const auto& st = states_[static_cast<size_t>(i)];
        const double frac = local_activation_fraction(grid_, st.position,
                                                      profiles_[static_cast<size_t>(i)].sampling_radius);
        last_observations_[static_cast<size_t>(i)] = frac;
        last_stimuli_[static_cast<size_t>(i)] = frac > 0.0 ? 1.0 : 0.0;
    }

    // (4) affect, (5) probability, (6) contagion, (7) disposition + mode
    std::vector<int> radii(static_cast<size_t>(n), config_.fixed_radius);
    for (int i = 0; i < n; ++i) {
        auto& st = states_[static_cast<size_t>(i)];
        const auto& pf = profiles_[static_cast<size_t>(i)];
        st.affect = rescorla_wagner_update(st.affect, last_stimuli_[static_cast<size_t>(i)],
                                           config_.rw);
        st.probability = st.memory.push(last_observations_[static_cast<size_t>(i)]);
        st.contagion_in = contagion_input(i, ties_, prev_solo);
        const double theta = activation_threshold(pf.theta_base, pf.gamma, config_.ext.age_impulse);
        const double damage = config_.ext.retaliation ? st.damage : 0.0;
        st.disposition = compute_disposition(st.affect, st.probability, st.contagion_in, theta,
                                             damage, config_.damage_penalty_coeff);
        st.mode = choose_mode(st.disposition, st.probability, pf.flight_threshold,
                              config_.ext.flight);
        if (config_.ext.endogenous_radius) radii[static_cast<size_t>(i)] = destructive_radius(st.affect);
    }

    // (8) actions in agent-id order against a phase-start positions snapshot
    std::vector<Coord> snapshot(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) snapshot[static_cast<size_t>(i)] = states_[static_cast<size_t>(i)].position;
    std::vector<AttackEvent> tick_events;
    for (int i = 0; i < n; ++i) {
        auto& st = states_[static_cast<size_t>(i)];
        const auto& pf = profiles_[static_cast<size_t>(i)];
        switch (st.mode) {
            case Mode::Fight:
                tick_events.push_back(execute_fight(t, i, st.position,
                                                    radii[static_cast<size_t>(i)], grid_, snapshot));
                break;
            case Mode::Flight:
                if (pf.mobile)
                    st.position = execute_flight(grid_, st.position, config_.conflict.flight_radius,
                                                 pf.sampling_radius,
                                                 agent_rngs_[static_cast<size_t>(i)]);
                break;
            case Mode::Quiet:
                if (pf.mobile)
                    st.position = random_walk(st.position, grid_.width(), grid_.height(),
                                              agent_rngs_[static_cast<size_t>(i)]);
                break;
        }
    }

    // (9) retaliation accounting, then decay
    if (config_.ext.retaliation) {
        std::vector<double> gammas(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) gammas[static_cast<size_t>(i)] = profiles_[static_cast<size_t>(i)].gamma;
        for (const auto& ev : tick_events) {
            const double per_neighbor = inflicted_damage(gammas[static_cast<size_t>(ev.attacker)],
                                                         config_.conflict.alpha_aggr);
            for (int j : ev.harmed) states_[static_cast<size_t>(j)].damage += per_neighbor;
            states_[static_cast<size_t>(ev.attacker)].damage +=
                retaliation_total(ev.harmed, gammas, config_.conflict.beta_ret);
        }
        for (auto& st : states_) st.damage *= config_.conflict.damage_decay;
    }

    // (10) homophily
    if (config_.ext.homophily && n > 1) {
        std::vector<double> affects(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) affects[static_cast<size_t>(i)] = states_[static_cast<size_t>(i)].affect;
        homophily_update(ties_, affects, config_.alpha_hom);
    }

    // (11) scheduled shock
    apply_shock(t);

    // (12) commit + frame
    for (auto& ev : tick_events) events_.push_back(std::move(ev));
    tick_ = t;

    MetricsFrame frame;
    frame.tick = t;
    frame.agents.resize(static_cast<size_t>(n));
    double total_contagion = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto& st = states_[static_cast<size_t>(i)];
        auto& row = frame.agents[static_cast<size_t>(i)];
        row.affect = st.affect;
        row.probability = st.probability;
        row.contagion = st.contagion_in;
        row.disposition = st.disposition;
        row.mode = st.mode;
        row.x = st.position.x;
        row.y = st.position.y;
        row.radius = radii[static_cast<size_t>(i)];
        row.damage = st.damage;
        total_contagion += st.contagion_in;
    }
    frame.mean_contagion = total_contagion / static_cast<double>(n);
    const PatchCounts counts = grid_.counts();
    frame.destroyed_count = counts.destroyed;
    frame.active_count = counts.active;
    frame.avg_tie_strength = average_tie_strength(ties_);
    frame.tie_strength_dispersion = tie_strength_dispersion(ties_);
    return frame;
}

RunResult run_model(const SimConfig& config) {
    Model model(config);
    RunResult result;
    result.frames.reserve(static_cast<size_t>(config.n_ticks));
    for (long t = 0; t < config.n_ticks; ++t) result.frames.push_back(model.step());
    result.events = model.events();
    return result;
}

}  // namespace azpp
