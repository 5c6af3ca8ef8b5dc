#pragma once

#include <kthresh/graph.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace kthresh
{
    inline constexpr int black = 0;
    inline constexpr int white = 1;

    enum class OpKind
    {
        add,
        join_color,
        join_all
    };

    /// One decomposition-tree operator: add isolated, join to every earlier
    /// vertex of one colour, or join to every earlier vertex.
    struct Operator
    {
        OpKind kind = OpKind::add;
        int color = 0;

        static auto add() -> Operator { return {OpKind::add, 0}; }
        static auto join(int color) -> Operator { return {OpKind::join_color, color}; }
        static auto join_all() -> Operator { return {OpKind::join_all, 0}; }

        auto operator==(const Operator &) const -> bool = default;
    };

    struct Step
    {
        int vertex = 0;
        int color = 0;
        Operator op;

        auto operator==(const Step &) const -> bool = default;
    };

    /// Caterpillar decomposition tree listed in vertex-addition order. Step 0
    /// is the seed; its operator is ignored. The step vertices are a
    /// permutation of 0..size-1, so evaluation reproduces labels exactly.
    struct BuildSequence
    {
        int k = 1;
        std::vector<Step> steps;

        auto operator==(const BuildSequence &) const -> bool = default;

        auto vertex_order() const -> std::vector<int>;
    };

    /// Throws std::domain_error if the sequence is malformed.
    auto validate(const BuildSequence & seq) -> void;

    auto evaluate(const BuildSequence & seq) -> ColoredGraph;

    /// One step per line: "seed <color> <vertex>" then "<op> <color> <vertex>",
    /// op in {add, joinb, joinw, join<i>, joinall}. Colours are b/w for k <= 2,
    /// digits otherwise.
    auto to_text(const BuildSequence & seq) -> std::string;

    /// Inverse of to_text. The vertex column may be omitted, in which case
    /// step j realises vertex j. k defaults to the smallest count covering
    /// every colour mentioned.
    auto parse_build_sequence(std::string_view text, int k = 0) -> BuildSequence;
}
