#pragma once

#include <complex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "toricmirror/disc_algebra.hpp"
#include "toricmirror/lg_model.hpp"
#include "toricmirror/quantum_ring.hpp"
#include "toricmirror/syz_transform.hpp"
#include "toricmirror/toric_data.hpp"
#include "toricmirror/tropical.hpp"

namespace toricmirror {

/// Keys keep insertion order so reports read top-down.
using Json = nlohmann::ordered_json;

Json to_json(const ToricFanoData& data);
Json to_json(const QLaurent& c);
Json to_json(const LaurentSeriesZ& s);
/// {exponent vector: {q-exponent vector: rational string}}
Json to_json(const AdmissibleFunction& f);
Json to_json(const DiscSeries& s);
Json to_json(std::complex<double> z);
Json to_json(const CriticalPointSet& cps);
Json to_json(const RingPresentation& pres);
Json to_json(const VerificationReport& report);
Json to_json(const TropicalCurve& curve, const ToricFanoData& data);
Json to_json(const std::vector<mpq_class>& point);

/// Indented JSON with every floating value written with 17 significant digits,
/// so equal reports are byte-identical.
std::string dump_json(const Json& j);

}  // namespace toricmirror
