#include <kthresh/build_sequence.hpp>

#include <algorithm>
#include <sstream>

namespace kthresh
{
    auto BuildSequence::vertex_order() const -> std::vector<int>
    {
        std::vector<int> out;
        for (auto & s : steps)
            out.push_back(s.vertex);
        return out;
    }

    auto validate(const BuildSequence & seq) -> void
    {
        if (seq.steps.empty())
            throw std::domain_error("build sequence is empty");
        if (seq.k < 1)
            throw std::domain_error("build sequence needs at least one colour");
        if (int(seq.steps.size()) > max_vertices)
            throw CapacityError("build sequence longer than 64 steps");

        int n = int(seq.steps.size());
        VertexSet seen;
        for (auto & s : seq.steps) {
            if (s.vertex < 0 || s.vertex >= n || seen.contains(s.vertex))
                throw std::domain_error("step vertices are not a permutation");
            seen.insert(s.vertex);
            if (s.color < 0 || s.color >= seq.k)
                throw std::domain_error("step colour out of range");
            if (s.op.kind == OpKind::join_color && (s.op.color < 0 || s.op.color >= seq.k))
                throw std::domain_error("join colour out of range");
        }
    }

    auto evaluate(const BuildSequence & seq) -> ColoredGraph
    {
        validate(seq);
        int n = int(seq.steps.size());
        ColoredGraph out{Graph(n), Coloring(n, 0)};
        for (int j = 0; j < n; ++j) {
            auto & s = seq.steps[j];
            out.colors[s.vertex] = s.color;
            if (j == 0)
                continue;
            for (int i = 0; i < j; ++i) {
                auto & earlier = seq.steps[i];
                bool edge = false;
                switch (s.op.kind) {
                case OpKind::add: break;
                case OpKind::join_color: edge = earlier.color == s.op.color; break;
                case OpKind::join_all: edge = true; break;
                }
                if (edge)
                    out.graph.add_edge(s.vertex, earlier.vertex);
            }
        }
        return out;
    }

    namespace
    {
        auto color_token(int c, int k) -> std::string
        {
            if (k <= 2)
                return c == black ? "b" : "w";
            return std::to_string(c);
        }

        auto parse_color(const std::string & tok, std::size_t line, std::size_t offset) -> int
        {
            if (tok == "b")
                return black;
            if (tok == "w")
                return white;
            if (! tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
                return std::stoi(tok);
            throw ParseError("bad colour '" + tok + "' on line " + std::to_string(line + 1), offset);
        }
    }

    auto to_text(const BuildSequence & seq) -> std::string
    {
        std::string out;
        for (std::size_t j = 0; j < seq.steps.size(); ++j) {
            auto & s = seq.steps[j];
            std::string op;
            if (j == 0)
                op = "seed";
            else
                switch (s.op.kind) {
                case OpKind::add: op = "add"; break;
                case OpKind::join_all: op = "joinall"; break;
                case OpKind::join_color: op = "join" + color_token(s.op.color, seq.k); break;
                }
            out += op + " " + color_token(s.color, seq.k) + " " + std::to_string(s.vertex) + "\n";
        }
        return out;
    }

    auto parse_build_sequence(std::string_view text, int k) -> BuildSequence
    {
        BuildSequence seq;
        std::istringstream in{std::string(text)};
        std::string line;
        std::size_t line_no = 0, line_start = 0, next_start = 0;
        int max_color = 0;
        bool explicit_vertices = false, implicit_vertices = false;

        for (; std::getline(in, line); ++line_no) {
            line_start = next_start;
            next_start += line.size() + 1;
            std::istringstream words(line);
            std::string op, color, vertex, extra;
            if (! (words >> op))
                continue;
            if (! (words >> color))
                throw ParseError("missing colour on line " + std::to_string(line_no + 1), line_start);
            words >> vertex;
            if (words >> extra)
                throw ParseError("trailing text on line " + std::to_string(line_no + 1), line_start);

            Step s;
            s.color = parse_color(color, line_no, line_start);
            max_color = std::max(max_color, s.color);
            if (vertex.empty()) {
                implicit_vertices = true;
                s.vertex = int(seq.steps.size());
            }
            else {
                explicit_vertices = true;
                try {
                    s.vertex = std::stoi(vertex);
                }
                catch (const std::exception &) {
                    throw ParseError("bad vertex '" + vertex + "' on line " + std::to_string(line_no + 1), line_start);
                }
            }

            bool first = seq.steps.empty();
            if (op == "seed") {
                if (! first)
                    throw ParseError("seed must be the first step", line_start);
            }
            else if (first)
                throw ParseError("sequence must start with a seed step", line_start);
            else if (op == "add")
                s.op = Operator::add();
            else if (op == "joinall")
                s.op = Operator::join_all();
            else if (op.starts_with("join")) {
                s.op = Operator::join(parse_color(op.substr(4), line_no, line_start));
                max_color = std::max(max_color, s.op.color);
            }
            else
                throw ParseError("unknown operator '" + op + "' on line " + std::to_string(line_no + 1), line_start);
            seq.steps.push_back(s);
        }

        if (explicit_vertices && implicit_vertices)
            throw ParseError("vertex column must be given on every line or none", line_start);
        seq.k = k > 0 ? k : max_color + 1;
        validate(seq);
        return seq;
    }
}
