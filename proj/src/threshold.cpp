#include <kthresh/threshold.hpp>

#include <algorithm>

namespace kthresh
{
    auto is_threshold(const Graph & g) -> std::optional<ThresholdCertificate>
    {
        ThresholdCertificate cert;
        auto left = g.vertices();
        while (! left.empty()) {
            bool found = false;
            for (int v : left) {
                auto others = left;
                others.erase(v);
                auto nb = g.neighbours(v) & left;
                if (nb.empty()) {
                    cert.elimination.push_back({v, RemovalKind::isolated});
                    found = true;
                }
                else if (nb == others) {
                    cert.elimination.push_back({v, RemovalKind::universal});
                    found = true;
                }
                if (found) {
                    left.erase(v);
                    break;
                }
            }
            if (! found)
                return std::nullopt;
        }
        return cert;
    }

    auto check_certificate(const Graph & g, const ThresholdCertificate & cert) -> bool
    {
        if (int(cert.elimination.size()) != g.size())
            return false;
        auto left = g.vertices();
        for (auto [v, kind] : cert.elimination) {
            if (v < 0 || v >= g.size() || ! left.contains(v))
                return false;
            auto others = left;
            others.erase(v);
            auto nb = g.neighbours(v) & left;
            if (kind == RemovalKind::isolated ? ! nb.empty() : nb != others)
                return false;
            left.erase(v);
        }
        return true;
    }

    auto threshold_order(const Graph & g) -> std::optional<std::vector<int>>
    {
        if (! is_threshold(g))
            return std::nullopt;
        std::vector<int> order(g.size());
        for (int v = 0; v < g.size(); ++v)
            order[v] = v;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
        return order;
    }

    auto is_threshold_order(const Graph & g, const std::vector<int> & order) -> bool
    {
        if (int(order.size()) != g.size())
            return false;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t j = i + 1; j < order.size(); ++j) {
                int a = order[i], b = order[j];
                bool ok = g.adjacent(a, b) ? g.closed_neighbours(a).subset_of(g.closed_neighbours(b))
                                           : g.neighbours(a).subset_of(g.neighbours(b));
                if (! ok)
                    return false;
            }
        return true;
    }

    auto build_threshold_tree(const Graph & g) -> std::optional<BuildSequence>
    {
        auto cert = is_threshold(g);
        if (! cert)
            return std::nullopt;

        BuildSequence seq;
        seq.k = 1;
        auto & elim = cert->elimination;
        for (auto it = elim.rbegin(); it != elim.rend(); ++it)
            seq.steps.push_back(
                {it->vertex, 0, it->kind == RemovalKind::isolated ? Operator::add() : Operator::join_all()});
        return seq;
    }
}
