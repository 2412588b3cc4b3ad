#include <doctest.h>

#include "braess/config.hpp"

using namespace braess;

TEST_CASE("minimal config fills the documented defaults") {
    const auto cfg = parse_config_text("[params]\nalpha = 0.7\n", "mini");
    CHECK(cfg.n == 100);
    CHECK(cfg.horizon == 100000);
    CHECK(cfg.reps == 40);
    CHECK(cfg.epsilon == std::vector<double>{0.01});
    CHECK(cfg.beta == std::vector<double>{0.0});
    CHECK(cfg.init == InitMode::Random);
    CHECK(cfg.alpha == std::vector<double>{0.7});

    const SimConfig sim = cfg.to_sim_config();
    CHECK(sim.spec.n == 100);
    CHECK(sim.params.size() == 100);
    CHECK(sim.params[0].alpha == 0.7);
    CHECK(sim.params[0].epsilon == 0.01);
}

TEST_CASE("full config round-trips through emit") {
    const std::string text = R"(
# alpha meta-game, desk scale
[game]
n = 50
[run]
T = 2000
reps = 8
master_seed = 424242
init = nash-eq
[params]
alpha = 0.6
beta = 0.1
epsilon = 0.01
[sweep]
kind = deviant
parameter = alpha
population_grid = 0.01, 0.3, 0.6
deviant_grid = 0.01, 0.5
[output]
dir = results/alpha_game
plots = heatmap, timeseries
)";
    const auto cfg = parse_config_text(text, "full");
    CHECK(cfg.n == 50);
    CHECK(cfg.init == InitMode::NashEq);
    CHECK(cfg.master_seed == 424242);
    CHECK(cfg.sweep.kind == ExperimentConfig::SweepKind::Deviant);
    CHECK(cfg.sweep.population_grid == std::vector<double>{0.01, 0.3, 0.6});
    CHECK(cfg.output.dir == "results/alpha_game");

    const auto round = parse_config_text(emit_config(cfg), "round");
    CHECK(round == cfg);
    // emit is a fixed point
    CHECK(emit_config(round) == emit_config(cfg));
}

TEST_CASE("per-agent parameter lists") {
    const auto cfg = parse_config_text(
        "[game]\nn = 3\n[params]\nalpha = 0.2, 0.5, 0.9\nbeta = 0.1\n", "per-agent");
    const SimConfig sim = cfg.to_sim_config();
    CHECK(sim.params[0].alpha == 0.2);
    CHECK(sim.params[2].alpha == 0.9);
    CHECK(sim.params[1].beta == 0.1);

    const auto round = parse_config_text(emit_config(cfg), "round");
    CHECK(round == cfg);
}

TEST_CASE("rejections") {
    SUBCASE("beta above alpha, naming the keys") {
        CHECK_THROWS_WITH_AS(
            parse_config_text("[params]\nalpha = 0.3\nbeta = 0.5\n", "bad"),
            doctest::Contains("beta"), ConfigError);
    }
    SUBCASE("empty file") {
        CHECK_THROWS_AS(parse_config_text("", "empty"), ConfigError);
        CHECK_THROWS_AS(parse_config_text("  \n# only a comment\n", "empty"), ConfigError);
    }
    SUBCASE("parse errors carry the line number") {
        CHECK_THROWS_WITH_AS(
            parse_config_text("[params]\nalpha = 0.3\nnonsense line\n", "f"),
            doctest::Contains("f:3"), ConfigError);
    }
    SUBCASE("alpha is required") {
        CHECK_THROWS_AS(parse_config_text("[game]\nn = 10\n", "f"), ConfigError);
    }
    SUBCASE("values outside [0,1]") {
        CHECK_THROWS_AS(parse_config_text("[params]\nalpha = 1.5\n", "f"), ConfigError);
    }
    SUBCASE("grids must be strictly increasing") {
        CHECK_THROWS_AS(parse_config_text(
            "[params]\nalpha = 0.5\n[sweep]\nkind = homogeneous\ngrid = 0.5, 0.3\n", "f"),
            ConfigError);
    }
    SUBCASE("unknown section and key") {
        CHECK_THROWS_AS(parse_config_text("[bogus]\nx = 1\n", "f"), ConfigError);
        CHECK_THROWS_AS(parse_config_text("[game]\nplayers = 5\n", "f"), ConfigError);
    }
    SUBCASE("per-agent list of the wrong length") {
        CHECK_THROWS_AS(
            parse_config_text("[game]\nn = 4\n[params]\nalpha = 0.1, 0.2\n", "f"), ConfigError);
    }
    SUBCASE("half widths capped at 0.5") {
        CHECK_THROWS_AS(parse_config_text(
            "[params]\nalpha = 0.5\n[sweep]\nkind = heterogeneous-alpha\nhalf_widths = 0.7\n", "f"),
            ConfigError);
    }
}

TEST_CASE("missing file") {
    CHECK_THROWS_AS(parse_config("/nonexistent/path.cfg"), ConfigError);
}
