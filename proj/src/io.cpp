#include "lll/io.hpp"

#include "lll/errors.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

namespace lll {

namespace {

struct Token {
    std::string text;
    std::size_t line;
    std::size_t column;
};

class TokenStream {
public:
    TokenStream(std::istream& in, std::string name) : name_(std::move(name)) {
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t comment = line.find('#');
            if (comment != std::string::npos) line.resize(comment);
            std::size_t i = 0;
            while (i < line.size()) {
                if (std::isspace(static_cast<unsigned char>(line[i]))) {
                    ++i;
                    continue;
                }
                std::size_t start = i;
                while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
                tokens_.push_back({line.substr(start, i - start), lineno, start + 1});
            }
            last_line_ = lineno;
        }
    }

    bool done() const { return pos_ >= tokens_.size(); }

    const Token& peek() const {
        if (done()) fail_eof();
        return tokens_[pos_];
    }

    Token take(const char* what) {
        if (done()) fail_eof(what);
        return tokens_[pos_++];
    }

    std::size_t take_uint(const char* what, std::size_t min_value = 0) {
        Token t = take(what);
        std::size_t value = 0;
        if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(t.line, t.column,
                             name_ + ": expected " + std::string(what) + ", got '" + t.text + "'");
        try {
            value = std::stoull(t.text);
        } catch (const std::out_of_range&) {
            throw ParseError(t.line, t.column, name_ + ": number out of range: '" + t.text + "'");
        }
        if (value < min_value)
            throw ParseError(t.line, t.column,
                             name_ + ": " + std::string(what) + " must be at least " +
                                 std::to_string(min_value));
        return value;
    }

    long long take_int(const char* what) {
        Token t = take(what);
        try {
            std::size_t consumed = 0;
            long long value = std::stoll(t.text, &consumed);
            if (consumed != t.text.size()) throw std::invalid_argument(t.text);
            return value;
        } catch (const std::exception&) {
            throw ParseError(t.line, t.column,
                             name_ + ": expected " + std::string(what) + ", got '" + t.text + "'");
        }
    }

    Rational take_rational(const char* what) {
        Token t = take(what);
        try {
            return parse_rational(t.text);
        } catch (const DomainError& err) {
            throw ParseError(t.line, t.column, name_ + ": " + err.what());
        }
    }

    void expect_done() const {
        if (!done()) {
            const Token& t = tokens_[pos_];
            throw ParseError(t.line, t.column, name_ + ": unexpected trailing token '" + t.text + "'");
        }
    }

    [[noreturn]] void fail_eof(const char* what = nullptr) const {
        std::string msg = name_ + ": unexpected end of input";
        if (what) msg += std::string(" (expected ") + what + ")";
        throw ParseError(last_line_ == 0 ? 1 : last_line_, 1, msg);
    }

    const std::string& name() const { return name_; }

private:
    std::string name_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t last_line_ = 0;
};

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, 0, "cannot open file: " + path);
    return in;
}

} // namespace

IntMatrix read_matrix(std::istream& in, const std::string& name) {
    TokenStream ts(in, name);
    std::size_t n = ts.take_uint("matrix dimension n", 1);
    std::vector<long long> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n * n; ++i) entries.push_back(ts.take_int("matrix entry"));
    ts.expect_done();
    return IntMatrix(n, std::move(entries));
}

IntMatrix read_matrix_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_matrix(in, path);
}

Hypergraph read_hypergraph(std::istream& in, const std::string& name) {
    TokenStream ts(in, name);
    std::size_t n = ts.take_uint("vertex count n", 1);
    std::size_t r = ts.take_uint("uniformity r", 1);
    std::vector<std::vector<std::size_t>> edges;
    while (!ts.done()) {
        std::vector<std::size_t> edge;
        edge.reserve(r);
        for (std::size_t i = 0; i < r; ++i) edge.push_back(ts.take_uint("edge vertex", 1));
        edges.push_back(std::move(edge));
    }
    return Hypergraph(n, r, std::move(edges));
}

Hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_hypergraph(in, path);
}

EventsSpec read_events_spec(std::istream& in, const std::string& name) {
    TokenStream ts(in, name);
    EventsSpec spec;
    spec.m = ts.take_uint("domain size m", 1);
    spec.n = ts.take_uint("codomain size n", 1);
    while (!ts.done()) {
        if (ts.peek().text == "GRAPH") {
            ts.take("GRAPH");
            std::vector<std::pair<std::size_t, std::size_t>> edges;
            while (!ts.done()) {
                std::size_t u = ts.take_uint("graph edge endpoint", 1);
                std::size_t v = ts.take_uint("graph edge endpoint", 1);
                edges.emplace_back(u, v);
            }
            spec.graph = Graph(spec.matchings.size(), edges);
            break;
        }
        std::size_t r = ts.take_uint("matching size r");
        std::vector<Matching::Pair> pairs;
        pairs.reserve(r);
        for (std::size_t i = 0; i < r; ++i) {
            std::size_t dom = ts.take_uint("matching domain point", 1);
            std::size_t img = ts.take_uint("matching image point", 1);
            pairs.emplace_back(dom, img);
        }
        spec.matchings.push_back(Matching::from_pairs(spec.m, spec.n, pairs));
    }
    return spec;
}

EventsSpec read_events_spec_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_events_spec(in, path);
}

WeightedSystemSpec read_weighted_system(std::istream& in, const std::string& name) {
    TokenStream ts(in, name);
    WeightedSystemSpec spec;
    std::vector<Rational> weights;
    while (!ts.done()) {
        Token key = ts.take("keyword");
        if (key.text == "p") {
            spec.p.push_back(ts.take_rational("probability"));
        } else if (key.text == "edge") {
            std::size_t u = ts.take_uint("edge endpoint", 1);
            std::size_t v = ts.take_uint("edge endpoint", 1);
            spec.edges.emplace_back(u, v);
        } else if (key.text == "x") {
            weights.push_back(ts.take_rational("weight"));
        } else {
            throw ParseError(key.line, key.column,
                             name + ": unknown keyword '" + key.text + "' (expected p, edge, or x)");
        }
    }
    if (spec.p.empty()) throw ParseError(1, 1, name + ": no p lines (need at least one event)");
    if (!weights.empty()) {
        if (weights.size() != spec.p.size())
            throw ParseError(1, 1, name + ": have " + std::to_string(weights.size()) +
                                       " x lines for " + std::to_string(spec.p.size()) +
                                       " p lines");
        spec.x = std::move(weights);
    }
    return spec;
}

WeightedSystemSpec read_weighted_system_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_weighted_system(in, path);
}

} // namespace lll
