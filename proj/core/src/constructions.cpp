#include "tilepot/constructions.hpp"

#include <stdexcept>

namespace tilepot {

namespace {

// Builder for a tile as a list of (symbol index, hatted, multiplicity)
// arms. Symbol index 0 means the bare symbol "a" (single-type pots);
// index i >= 1 means "a<i>".
class TileBuilder {
public:
    TileBuilder& arm(int index, bool hatted, int count = 1) {
        for (int c = 0; c < count; ++c)
            arms_.push_back({symbol(index), hatted});
        return *this;
    }

    Tile build() const { return Tile(arms_); }

private:
    static std::string symbol(int index) {
        return index == 0 ? "a" : "a" + std::to_string(index);
    }

    std::vector<HalfEdgeLabel> arms_;
};

Tile tile(std::initializer_list<std::tuple<int, bool, int>> arms) {
    TileBuilder b;
    for (const auto& [index, hatted, count] : arms)
        b.arm(index, hatted, count);
    return b.build();
}

constexpr bool kHat = true;
constexpr bool kPlain = false;

void set_recipe(PotRecipe* recipe, const std::string& family, int scenario,
                const std::string& regime, const std::string& rule) {
    if (!recipe) return;
    recipe->family = family;
    recipe->scenario = scenario;
    recipe->regime = regime;
    recipe->rule = rule;
}

// {~a_(i-1), a_i} chain tiles for i in [first, last].
void append_chain(std::vector<Tile>& tiles, int first, int last) {
    for (int i = first; i <= last; ++i)
        tiles.push_back(tile({{i - 1, kHat, 1}, {i, kPlain, 1}}));
}

Pot lollipop_scenario1(int m, int n, PotRecipe* recipe) {
    std::vector<Tile> tiles;
    std::string rule;
    if (m % 2 == 0) {
        // Clique vertices split into one all-plain hub and m-1 balanced
        // tiles; a single bond type suffices.
        tiles.push_back(tile({{0, kPlain, m}}));
        tiles.push_back(tile({{0, kPlain, m / 2 - 1}, {0, kHat, m / 2}}));
        rule = "single-type-even";
    } else {
        tiles.push_back(tile({{0, kPlain, m / 2 + 1}, {0, kHat, m / 2}}));
        tiles.push_back(tile({{0, kPlain, m / 2}, {0, kHat, m / 2}}));
        rule = "single-type-odd";
    }
    if (n > 1) tiles.push_back(tile({{0, kPlain, 1}, {0, kHat, 1}}));
    tiles.push_back(tile({{0, kHat, 1}}));
    set_recipe(recipe, "lollipop", 1, n > 1 ? "path" : "pendant", rule);
    return Pot(tiles);
}

Pot lollipop_scenario2(int m, int n, PotRecipe* recipe) {
    std::vector<Tile> tiles;
    if (m % 2 == 0) {
        const int k = m / 2;
        if (n == 1) {
            // Single bond type: hub {a1^m}, balanced fillers, pendant.
            tiles.push_back(tile({{1, kPlain, 2 * k}}));
            tiles.push_back(tile({{1, kPlain, k - 1}, {1, kHat, k}}));
            tiles.push_back(tile({{1, kHat, 1}}));
            set_recipe(recipe, "lollipop", 2, "pendant", "even-hub");
            return Pot(tiles);
        }
        // Hub feeds the path with a2; the path chain closes back onto a1
        // so every chain tile is forced into the path.
        tiles.push_back(tile({{1, kPlain, 2 * k - 1}, {2, kPlain, 1}}));
        tiles.push_back(tile({{1, kPlain, k - 1}, {1, kHat, k}}));
        append_chain(tiles, 3, n);
        tiles.push_back(tile({{n, kHat, 1}, {1, kPlain, 1}}));
        tiles.push_back(tile({{1, kHat, 1}}));
        set_recipe(recipe, "lollipop", 2, "path", "even-hub-loopback");
        return Pot(tiles);
    }
    const int k = m / 2; // m = 2k + 1
    // Odd cliques need a second type to pair the non-hub vertices.
    tiles.push_back(tile({{1, kPlain, 2 * k + 1}}));
    tiles.push_back(tile({{1, kHat, 1}, {2, kPlain, k - 1}, {2, kHat, k}}));
    tiles.push_back(tile({{1, kHat, 1}, {2, kPlain, k}, {2, kHat, k - 1}}));
    if (n == 1) {
        tiles.push_back(tile({{1, kHat, 1}}));
        set_recipe(recipe, "lollipop", 2, "pendant", "odd-hub");
        return Pot(tiles);
    }
    append_chain(tiles, 2, n);
    tiles.push_back(tile({{n, kHat, 1}}));
    set_recipe(recipe, "lollipop", 2, "path", "odd-hub-chain");
    return Pot(tiles);
}

Pot lollipop_scenario3(int m, int n, PotRecipe* recipe) {
    std::vector<Tile> tiles;
    if (n == 1) {
        // Cascade with the pendant vertex reusing the second cascade
        // type, keeping the bond-type count at m - 1.
        tiles.push_back(tile({{1, kPlain, m - 1}}));
        tiles.push_back(tile({{1, kHat, 1}, {2, kPlain, m - 1}}));
        for (int i = 3; i <= m; ++i) {
            TileBuilder b;
            for (int j = 1; j < i; ++j) b.arm(j, kHat);
            b.arm(i, kPlain, m - i);
            tiles.push_back(b.build());
        }
        tiles.push_back(tile({{2, kHat, 1}}));
        set_recipe(recipe, "lollipop", 3, "pendant", "cascade-reuse");
        return Pot(tiles);
    }
    // Full cascade on the clique; a fresh type per path edge.
    tiles.push_back(tile({{1, kPlain, m - 1}, {m, kPlain, 1}}));
    for (int i = 2; i <= m; ++i) {
        TileBuilder b;
        for (int j = 1; j < i; ++j) b.arm(j, kHat);
        b.arm(i, kPlain, m - i);
        tiles.push_back(b.build());
    }
    tiles.push_back(tile({{m, kHat, 1}, {m + 1, kPlain, 1}}));
    append_chain(tiles, m + 2, m + n - 1);
    tiles.push_back(tile({{m + n - 1, kHat, 1}}));
    set_recipe(recipe, "lollipop", 3, "path", "cascade-fresh-path");
    return Pot(tiles);
}

// Medium appended paths (ceil(m/2) <= n <= m) admit one pot that is
// optimal for both scenarios 2 and 3.
Pot tadpole_medium(int scenario, int m, int n, PotRecipe* recipe) {
    const int k = m / 2;
    std::vector<Tile> tiles;
    tiles.push_back(tile({{1, kPlain, 3}}));
    append_chain(tiles, 2, n);
    tiles.push_back(tile({{n, kHat, 1}}));
    if (m % 2 == 0) {
        tiles.push_back(tile({{k, kHat, 2}}));
        set_recipe(recipe, "tadpole", scenario, "medium", "fold-even");
    } else {
        tiles.push_back(tile({{k, kHat, 1}, {k + 1, kHat, 1}}));
        set_recipe(recipe, "tadpole", scenario, "medium", "fold-odd");
    }
    return Pot(tiles);
}

// Long appended paths (n > m): the cycle is traversed by the same chain
// as the path, closing with a hatted arm on the branching tile.
Pot tadpole_long(int scenario, int m, int n, PotRecipe* recipe) {
    std::vector<Tile> tiles;
    tiles.push_back(tile({{1, kPlain, 2}, {m, kHat, 1}}));
    append_chain(tiles, 2, n);
    tiles.push_back(tile({{n, kHat, 1}}));
    set_recipe(recipe, "tadpole", scenario, "long", "shared-chain");
    return Pot(tiles);
}

Pot tadpole_scenario1(int m, int n, PotRecipe* recipe) {
    (void)m;
    (void)n;
    std::vector<Tile> tiles;
    tiles.push_back(tile({{0, kHat, 1}, {0, kPlain, 1}}));
    tiles.push_back(tile({{0, kHat, 1}, {0, kPlain, 2}}));
    tiles.push_back(tile({{0, kHat, 1}}));
    set_recipe(recipe, "tadpole", 1, "any", "single-type");
    return Pot(tiles);
}

Pot tadpole_scenario2_short(int m, int n, PotRecipe* recipe) {
    const int k = m / 2;
    std::vector<Tile> tiles;
    if (m % 2 == 0) {
        // Branching tile starts both cycle arcs and hands the path its
        // chain type directly; the cycle folds at {~a_k, ~a_k}.
        const int branch = k - n + 1;
        if (branch == 1) {
            tiles.push_back(tile({{1, kPlain, 3}}));
        } else {
            tiles.push_back(tile({{1, kPlain, 2}, {branch, kPlain, 1}}));
        }
        append_chain(tiles, 2, k);
        tiles.push_back(tile({{k, kHat, 2}}));
        tiles.push_back(tile({{k, kHat, 1}}));
        set_recipe(recipe, "tadpole", 2, "short", "fold-even");
        return Pot(tiles);
    }
    const int branch = k - n + 2;
    if (branch == 1) {
        tiles.push_back(tile({{1, kPlain, 3}}));
    } else {
        tiles.push_back(tile({{1, kPlain, 2}, {branch, kPlain, 1}}));
    }
    append_chain(tiles, 2, k);
    tiles.push_back(tile({{k, kHat, 1}, {k + 1, kHat, 1}}));
    tiles.push_back(tile({{k, kHat, 1}, {k + 1, kPlain, 1}}));
    tiles.push_back(tile({{k + 1, kHat, 1}}));
    set_recipe(recipe, "tadpole", 2, "short", "fold-odd");
    return Pot(tiles);
}

Pot tadpole_scenario3_short(int m, int n, PotRecipe* recipe) {
    const int k = m / 2;
    std::vector<Tile> tiles;
    if (m % 2 == 0) {
        // Distinct chain types all the way down the path keep every
        // smaller or same-order alternative unmatched.
        tiles.push_back(tile({{1, kPlain, 2}, {k + 1, kPlain, 1}}));
        append_chain(tiles, 2, k);
        tiles.push_back(tile({{k, kHat, 2}}));
        append_chain(tiles, k + 2, k + n);
        tiles.push_back(tile({{k + n, kHat, 1}}));
        set_recipe(recipe, "tadpole", 3, "short", "fold-even-fresh-path");
        return Pot(tiles);
    }
    tiles.push_back(tile({{1, kPlain, 2}, {2, kPlain, 1}}));
    append_chain(tiles, 2, k + 1);
    tiles.push_back(tile({{k + 1, kHat, 2}}));
    if (n == 1) {
        tiles.push_back(tile({{1, kHat, 1}}));
        set_recipe(recipe, "tadpole", 3, "short", "fold-odd-pendant");
        return Pot(tiles);
    }
    tiles.push_back(tile({{1, kHat, 1}, {k + 2, kPlain, 1}}));
    for (int l = k + 4; l <= k + n + 1; ++l)
        tiles.push_back(tile({{l - 2, kHat, 1}, {l - 1, kPlain, 1}}));
    tiles.push_back(tile({{k + n, kHat, 1}}));
    set_recipe(recipe, "tadpole", 3, "short", "fold-odd-fresh-path");
    return Pot(tiles);
}

void check_scenario_arg(int scenario) {
    if (scenario < 1 || scenario > 3)
        throw std::invalid_argument("scenario must be 1, 2, or 3");
}

} // namespace

Pot lollipop_pot(int scenario, int m, int n, PotRecipe* recipe) {
    check_scenario_arg(scenario);
    if (m < 4)
        throw std::invalid_argument(
            "lollipop_pot requires m >= 4 (use tadpole_pot for m = 3)");
    if (n < 1) throw std::invalid_argument("lollipop_pot requires n >= 1");
    switch (scenario) {
        case 1: return lollipop_scenario1(m, n, recipe);
        case 2: return lollipop_scenario2(m, n, recipe);
        default: return lollipop_scenario3(m, n, recipe);
    }
}

Pot tadpole_pot(int scenario, int m, int n, PotRecipe* recipe) {
    check_scenario_arg(scenario);
    if (m < 3) throw std::invalid_argument("tadpole_pot requires m >= 3");
    if (n < 1) throw std::invalid_argument("tadpole_pot requires n >= 1");
    if (scenario == 1) return tadpole_scenario1(m, n, recipe);
    const int half_up = (m + 1) / 2;
    if (n > m) return tadpole_long(scenario, m, n, recipe);
    if (n >= half_up) return tadpole_medium(scenario, m, n, recipe);
    return scenario == 2 ? tadpole_scenario2_short(m, n, recipe)
                         : tadpole_scenario3_short(m, n, recipe);
}

Pot counterexample_pot(const std::string& which, int m, int n,
                       PotRecipe* recipe) {
    if (m < 4) throw std::invalid_argument("counterexample_pot needs m >= 4");
    if (n < 1) throw std::invalid_argument("counterexample_pot needs n >= 1");
    std::vector<Tile> tiles;
    if (which == "example-1") {
        // The bridging vertex shares type a1 with the cascade hub, so
        // the path can be torn off and rebuilt at a smaller order.
        tiles.push_back(tile({{1, kPlain, m}}));
        for (int i = 2; i <= m; ++i) {
            TileBuilder b;
            for (int j = 1; j < i; ++j) b.arm(j, kHat);
            b.arm(i, kPlain, m - i);
            tiles.push_back(b.build());
        }
    } else if (which == "example-2") {
        // Type a1 labels two edges at the bridging vertex instead.
        {
            TileBuilder b;
            b.arm(1, kPlain, 2);
            for (int j = 2; j < m; ++j) b.arm(j, kHat);
            tiles.push_back(b.build());
        }
        tiles.push_back(tile({{2, kPlain, m - 1}}));
        for (int i = 3; i <= m - 1; ++i) {
            TileBuilder b;
            for (int j = 2; j < i; ++j) b.arm(j, kHat);
            b.arm(i, kPlain, m - i + 1);
            tiles.push_back(b.build());
        }
        {
            TileBuilder b;
            for (int j = 1; j < m; ++j) b.arm(j, kHat);
            tiles.push_back(b.build());
        }
    } else {
        throw std::invalid_argument(
            "counterexample_pot: which must be \"example-1\" or "
            "\"example-2\"");
    }
    if (n == 1) {
        tiles.push_back(tile({{1, kHat, 1}}));
    } else {
        tiles.push_back(tile({{1, kHat, 1}, {m, kPlain, 1}}));
        for (int l = m + 2; l <= m + n - 1; ++l)
            tiles.push_back(tile({{l - 2, kHat, 1}, {l - 1, kPlain, 1}}));
        tiles.push_back(tile({{m + n - 2, kHat, 1}}));
    }
    set_recipe(recipe, "lollipop", 3,
               n == 1 ? "pendant" : "path",
               which == "example-1" ? "shared-hub-type"
                                    : "doubled-hub-type");
    return Pot(tiles);
}

} // namespace tilepot
