#pragma once

/// \file
/// \brief Pass/fail record of one verified claim.

#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace poncelet::experiments {

enum class Status { pass, fail, inconclusive };

inline const char* to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    }
    return "?";
}

enum class Bound { at_most, at_least };

struct Tolerance {
    Bound bound = Bound::at_most;
    double value = 0.0;
};

/// Metrics with a declared tolerance decide the status; the rest are
/// informational.
class PropositionReport {
public:
    PropositionReport() = default;
    explicit PropositionReport(std::string id) : id_(std::move(id)) {}

    const std::string& id() const { return id_; }
    Status status() const
    {
        if (inconclusive_)
            return Status::inconclusive;
        return failed_ ? Status::fail : Status::pass;
    }
    bool pass() const { return status() == Status::pass; }

    void record(const std::string& name, double value) { metrics_[name] = value; }

    bool require_at_most(const std::string& name, double value, double tol)
    {
        return require(name, value, {Bound::at_most, tol});
    }
    bool require_at_least(const std::string& name, double value, double bound)
    {
        return require(name, value, {Bound::at_least, bound});
    }

    void fail(const std::string& note)
    {
        failed_ = true;
        notes_.push_back(note);
    }
    void mark_inconclusive(const std::string& note)
    {
        inconclusive_ = true;
        notes_.push_back(note);
    }
    void note(const std::string& n) { notes_.push_back(n); }

    void set_samples(long n) { samples_ = n; }
    long samples() const { return samples_; }

    const std::map<std::string, double>& metrics() const { return metrics_; }
    const std::map<std::string, Tolerance>& tolerances() const { return tolerances_; }
    const std::vector<std::string>& notes() const { return notes_; }

    double metric(const std::string& name) const
    {
        auto it = metrics_.find(name);
        return it == metrics_.end() ? std::nan("") : it->second;
    }

private:
    bool require(const std::string& name, double value, Tolerance t)
    {
        metrics_[name] = value;
        tolerances_[name] = t;
        const bool ok = t.bound == Bound::at_most ? value <= t.value : value >= t.value;
        if (!ok || std::isnan(value))
            failed_ = true;
        return ok;
    }

    std::string id_;
    bool failed_ = false;
    bool inconclusive_ = false;
    long samples_ = 0;
    std::map<std::string, double> metrics_;
    std::map<std::string, Tolerance> tolerances_;
    std::vector<std::string> notes_;
};

} // namespace poncelet::experiments
