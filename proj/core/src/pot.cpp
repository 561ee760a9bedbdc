#include "tilepot/pot.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace tilepot {

bool natural_symbol_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            // Compare whole digit runs numerically (no leading-zero fuss
            // at our scale: shorter run with equal value sorts equal-ish,
            // fall back to run length then text).
            std::size_t ia = i, jb = j;
            while (ia < a.size() && std::isdigit(static_cast<unsigned char>(a[ia]))) ++ia;
            while (jb < b.size() && std::isdigit(static_cast<unsigned char>(b[jb]))) ++jb;
            std::string ra = a.substr(i, ia - i), rb = b.substr(j, jb - j);
            // Strip leading zeros for value comparison.
            std::string va = ra.substr(std::min(ra.find_first_not_of('0'), ra.size() - 1));
            std::string vb = rb.substr(std::min(rb.find_first_not_of('0'), rb.size() - 1));
            if (va.size() != vb.size()) return va.size() < vb.size();
            if (va != vb) return va < vb;
            if (ra != rb) return ra < rb;
            i = ia;
            j = jb;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return (a.size() - i) < (b.size() - j);
}

Tile::Tile(std::vector<HalfEdgeLabel> arms) {
    if (arms.empty()) throw std::invalid_argument("tile must have at least one arm");
    std::sort(arms.begin(), arms.end());
    for (const auto& label : arms) {
        if (!arms_.empty() && arms_.back().first == label)
            ++arms_.back().second;
        else
            arms_.emplace_back(label, 1);
        ++degree_;
    }
}

int Tile::count(const HalfEdgeLabel& label) const {
    for (const auto& [l, c] : arms_)
        if (l == label) return c;
    return 0;
}

Pot::Pot(std::vector<Tile> tiles) : tiles_(std::move(tiles)) {
    if (tiles_.empty()) throw std::invalid_argument("pot must contain at least one tile");
    std::set<std::string, decltype(&natural_symbol_less)> symbols(&natural_symbol_less);
    for (std::size_t i = 0; i < tiles_.size(); ++i) {
        for (std::size_t j = i + 1; j < tiles_.size(); ++j)
            if (tiles_[i] == tiles_[j])
                throw std::invalid_argument("duplicate tile in pot");
        for (const auto& [label, count] : tiles_[i].arms())
            symbols.insert(label.bond_type);
    }
    bond_types_.assign(symbols.begin(), symbols.end());
}

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(message + " at line " + std::to_string(line) +
                         ", column " + std::to_string(column)),
      line(line),
      column(column) {}

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c, const char* what) {
        if (peek() != c) fail(std::string("expected ") + what);
        advance();
    }

    bool accept(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_space();
        if (pos_ >= text_.size() ||
            !std::isalpha(static_cast<unsigned char>(text_[pos_])))
            fail("expected identifier");
        std::string out;
        while (pos_ < text_.size() &&
               std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
            out.push_back(text_[pos_]);
            advance();
        }
        return out;
    }

    int count() {
        skip_space();
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected count");
        long long value = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) fail("count too large");
            advance();
        }
        if (value == 0) fail("count must be positive");
        return static_cast<int>(value);
    }

    [[noreturn]] void fail(const std::string& message) {
        throw ParseError(message, line_, col_);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

} // namespace

Pot parse_pot(const std::string& text) {
    Scanner s(text);
    std::vector<Tile> tiles;
    for (;;) {
        s.expect('{', "'{'");
        std::vector<HalfEdgeLabel> arms;
        if (s.peek() == '}')
            s.fail("empty tile");
        do {
            bool hatted = s.accept('~');
            std::string symbol = s.ident();
            int multiplicity = 1;
            if (s.accept(':')) multiplicity = s.count();
            for (int i = 0; i < multiplicity; ++i)
                arms.push_back(HalfEdgeLabel{symbol, hatted});
        } while (s.accept(','));
        s.expect('}', "'}'");
        tiles.emplace_back(std::move(arms));
        if (!s.accept(';')) break;
        if (s.done()) break; // trailing ";" permitted
    }
    if (!s.done()) s.fail("unexpected trailing input");
    try {
        return Pot(std::move(tiles));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

std::string format_pot(const Pot& pot) {
    std::ostringstream out;
    bool first_tile = true;
    for (const auto& tile : pot.tiles()) {
        if (!first_tile) out << "; ";
        first_tile = false;
        out << '{';
        bool first_arm = true;
        for (const auto& [label, count] : tile.arms()) {
            if (!first_arm) out << ", ";
            first_arm = false;
            if (label.hatted) out << '~';
            out << label.bond_type;
            if (count > 1) out << ':' << count;
        }
        out << '}';
    }
    return out.str();
}

bool validate_assembly(const LabeledAssembly& assembly, const Pot& pot) {
    const Multigraph& g = assembly.graph;
    const auto n = static_cast<std::size_t>(g.vertex_count());
    if (assembly.vertex_tiles.size() != n)
        throw std::invalid_argument("vertex_tiles size mismatch");
    if (assembly.edge_labels.size() != g.edge_count())
        throw std::invalid_argument("edge_labels size mismatch");
    for (int t : assembly.vertex_tiles)
        if (t < 0 || static_cast<std::size_t>(t) >= pot.tile_count())
            throw std::invalid_argument("vertex tile index out of range");

    // Tally induced arms per vertex.
    std::vector<std::map<HalfEdgeLabel, int>> induced(n);
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto& [u, v] = edges[e];
        const auto& label = assembly.edge_labels[e];
        HalfEdgeLabel plain{label.bond_type, false};
        HalfEdgeLabel hat{label.bond_type, true};
        if (u == v) {
            ++induced[static_cast<std::size_t>(u)][plain];
            ++induced[static_cast<std::size_t>(u)][hat];
        } else {
            if (label.unhatted_end != u && label.unhatted_end != v)
                throw std::invalid_argument("edge orientation names a non-endpoint");
            int other = label.unhatted_end == u ? v : u;
            ++induced[static_cast<std::size_t>(label.unhatted_end)][plain];
            ++induced[static_cast<std::size_t>(other)][hat];
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        const Tile& tile = pot.tiles()[static_cast<std::size_t>(assembly.vertex_tiles[v])];
        std::map<HalfEdgeLabel, int> expected;
        for (const auto& [label, count] : tile.arms()) expected[label] = count;
        if (induced[v] != expected) return false;
    }
    return true;
}

} // namespace tilepot
