#include "blowup.h"

#include <cstring>

#include "blowup/config.hpp"
#include "blowup/json_io.hpp"
#include "blowup/parse.hpp"

using namespace blowup;

struct bu_ring {
    RingPtr ring;
};
struct bu_poly {
    Polynomial poly;
};
struct bu_ideal {
    Ideal ideal;
};
struct bu_step {
    BlowupStep step;
};
struct bu_divisor {
    FactoredDivisor divisor;
};

namespace {

thread_local std::string g_last_error;

bu_status fail(bu_status code, const std::string& what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
bu_status guarded(Fn&& fn) {
    try {
        fn();
        return BU_OK;
    } catch (const parse_error& e) {
        return fail(BU_ERROR_SYNTAX, e.what());
    } catch (const resource_error& e) {
        return fail(BU_ERROR_RESOURCE, e.what());
    } catch (const argument_error& e) {
        return fail(BU_ERROR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(BU_ERROR_ARGUMENT, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

QuotientPresentation presentation_of(const bu_ideal* relations) {
    if (!relations) throw argument_error("null relations ideal");
    return {relations->ideal.ring(), relations->ideal};
}

const Chart& chart_of(const bu_step* step, size_t chart) {
    if (!step) throw argument_error("null blow-up step");
    if (chart >= step->step.charts.size()) throw argument_error("chart index out of range");
    return step->step.charts[chart];
}

void require(bool ok, const char* what) {
    if (!ok) throw argument_error(what);
}

} // namespace

extern "C" {

const char* bu_last_error(void) { return g_last_error.c_str(); }

void bu_string_free(char* s) { std::free(s); }

void bu_set_limits(unsigned saturation_cap, size_t gb_pair_cap, unsigned gb_degree_cap) {
    if (saturation_cap) limits().saturation_cap = saturation_cap;
    if (gb_pair_cap) limits().gb_pair_cap = gb_pair_cap;
    if (gb_degree_cap) limits().gb_degree_cap = gb_degree_cap;
}

bu_status bu_ring_create(const char* const* vars, size_t nvars, const char* order,
                         bu_ring** out) {
    return guarded([&] {
        require(vars && out, "null argument");
        std::vector<std::string> names;
        for (size_t i = 0; i < nvars; ++i) names.emplace_back(vars[i]);
        MonomialOrder ord = order ? MonomialOrder::from_name(order) : MonomialOrder::grevlex();
        *out = new bu_ring{make_ring(std::move(names), ord)};
    });
}

void bu_ring_free(bu_ring* r) { delete r; }

size_t bu_ring_arity(const bu_ring* r) { return r ? r->ring->arity() : 0; }

bu_status bu_ring_var(const bu_ring* r, size_t index, char** out) {
    return guarded([&] {
        require(r && out, "null argument");
        require(index < r->ring->arity(), "variable index out of range");
        *out = dup_string(r->ring->vars()[index]);
    });
}

bu_status bu_poly_parse(const bu_ring* r, const char* text, bu_poly** out) {
    return guarded([&] {
        require(r && text && out, "null argument");
        *out = new bu_poly{parse_polynomial(r->ring, text)};
    });
}

bu_status bu_poly_format(const bu_poly* p, char** out) {
    return guarded([&] {
        require(p && out, "null argument");
        *out = dup_string(p->poly.str());
    });
}

void bu_poly_free(bu_poly* p) { delete p; }

int bu_poly_is_zero(const bu_poly* p) { return p && p->poly.is_zero() ? 1 : 0; }

bu_status bu_ideal_create(const bu_ring* r, const bu_poly* const* gens, size_t ngens,
                          bu_ideal** out) {
    return guarded([&] {
        require(r && out, "null argument");
        std::vector<Polynomial> v;
        for (size_t i = 0; i < ngens; ++i) {
            require(gens && gens[i], "null generator");
            v.push_back(gens[i]->poly);
        }
        if (v.empty()) {
            *out = new bu_ideal{Ideal::zero(r->ring)};
        } else {
            *out = new bu_ideal{Ideal(r->ring, std::move(v))};
        }
    });
}

void bu_ideal_free(bu_ideal* i) { delete i; }

size_t bu_ideal_size(const bu_ideal* i) { return i ? i->ideal.size() : 0; }

bu_status bu_ideal_generator(const bu_ideal* i, size_t index, bu_poly** out) {
    return guarded([&] {
        require(i && out, "null argument");
        require(index < i->ideal.size(), "generator index out of range");
        *out = new bu_poly{i->ideal.gens()[index]};
    });
}

bu_status bu_groebner_basis(const bu_ideal* i, const char* order_or_null, bu_ideal** out) {
    return guarded([&] {
        require(i && out, "null argument");
        MonomialOrder ord = order_or_null ? MonomialOrder::from_name(order_or_null)
                                          : i->ideal.ring()->order();
        auto gb = groebner_basis(i->ideal, ord);
        *out = new bu_ideal{gb.basis.empty() ? Ideal::zero(i->ideal.ring())
                                             : Ideal(i->ideal.ring(), gb.basis)};
    });
}

bu_status bu_normal_form(const bu_poly* p, const bu_ideal* i, const char* order_or_null,
                         bu_poly** out) {
    return guarded([&] {
        require(p && i && out, "null argument");
        MonomialOrder ord = order_or_null ? MonomialOrder::from_name(order_or_null)
                                          : i->ideal.ring()->order();
        *out = new bu_poly{normal_form(p->poly, groebner_basis(i->ideal, ord))};
    });
}

bu_status bu_contains_one(const bu_ideal* i, int* out) {
    return guarded([&] {
        require(i && out, "null argument");
        *out = contains_one(i->ideal) ? 1 : 0;
    });
}

#define BU_BINARY_OP(name, expr)                                            \
    bu_status name(const bu_ideal* a, const bu_ideal* b, bu_ideal** out) {  \
        return guarded([&] {                                                \
            require(a && b && out, "null argument");                        \
            *out = new bu_ideal{expr(a->ideal, b->ideal)};                  \
        });                                                                 \
    }

BU_BINARY_OP(bu_ideal_sum, ideal_sum)
BU_BINARY_OP(bu_ideal_product, ideal_product)
BU_BINARY_OP(bu_ideal_intersection, intersection)
BU_BINARY_OP(bu_ideal_quotient, quotient)

#undef BU_BINARY_OP

bu_status bu_ideal_power(const bu_ideal* a, unsigned n, bu_ideal** out) {
    return guarded([&] {
        require(a && out, "null argument");
        *out = new bu_ideal{ideal_power(a->ideal, n)};
    });
}

bu_status bu_ideal_saturation(const bu_ideal* a, const bu_ideal* b, bu_ideal** out,
                              unsigned* exponent) {
    return guarded([&] {
        require(a && b && out, "null argument");
        auto [sat, k] = saturation(a->ideal, b->ideal);
        *out = new bu_ideal{std::move(sat)};
        if (exponent) *exponent = k;
    });
}

bu_status bu_ideal_eliminate(const bu_ideal* a, const size_t* drop, size_t ndrop,
                             bu_ideal** out) {
    return guarded([&] {
        require(a && out, "null argument");
        std::set<std::size_t> d;
        for (size_t i = 0; i < ndrop; ++i) d.insert(drop[i]);
        *out = new bu_ideal{eliminate(a->ideal, d)};
    });
}

bu_status bu_radical_membership(const bu_poly* p, const bu_ideal* i, int* out) {
    return guarded([&] {
        require(p && i && out, "null argument");
        *out = radical_membership(p->poly, i->ideal) ? 1 : 0;
    });
}

bu_status bu_ideal_dimension(const bu_ideal* i, int* out) {
    return guarded([&] {
        require(i && out, "null argument");
        *out = dimension(i->ideal);
    });
}

bu_status bu_radical_zero_dim(const bu_ideal* i, bu_ideal** out) {
    return guarded([&] {
        require(i && out, "null argument");
        *out = new bu_ideal{radical_zero_dim(i->ideal)};
    });
}

bu_status bu_jacobian_ideal(const bu_ideal* relations, bu_ideal** out) {
    return guarded([&] {
        require(out, "null argument");
        *out = new bu_ideal{jacobian_ideal(presentation_of(relations))};
    });
}

bu_status bu_is_smooth(const bu_ideal* relations, int* smooth, char** witness_json) {
    return guarded([&] {
        require(smooth, "null argument");
        auto verdict = is_smooth(presentation_of(relations));
        *smooth = verdict.smooth ? 1 : 0;
        if (witness_json) *witness_json = dup_string(smoothness_to_json(verdict).dump());
    });
}

bu_status bu_singular_locus(const bu_ideal* relations, bu_ideal** out) {
    return guarded([&] {
        require(out, "null argument");
        *out = new bu_ideal{singular_locus_ideal(presentation_of(relations))};
    });
}

bu_status bu_max_order_locus(const bu_poly* f, unsigned* mu, bu_ideal** locus) {
    return guarded([&] {
        require(f && mu && locus, "null argument");
        auto [m, l] = max_order_locus(f->poly);
        *mu = m;
        *locus = new bu_ideal{std::move(l)};
    });
}

bu_status bu_blowup(const bu_ideal* relations, const bu_ideal* center, bu_step** out) {
    return guarded([&] {
        require(center && out, "null argument");
        *out = new bu_step{blowup_charts(Center{presentation_of(relations), center->ideal})};
    });
}

void bu_step_free(bu_step* s) { delete s; }

size_t bu_step_chart_count(const bu_step* s) { return s ? s->step.charts.size() : 0; }

bu_status bu_step_chart_ring(const bu_step* s, size_t chart, bu_ring** out) {
    return guarded([&] {
        require(out, "null argument");
        *out = new bu_ring{chart_of(s, chart).ring};
    });
}

bu_status bu_step_chart_relations(const bu_step* s, size_t chart, bu_ideal** out) {
    return guarded([&] {
        require(out, "null argument");
        *out = new bu_ideal{chart_of(s, chart).relations};
    });
}

bu_status bu_step_chart_exceptional(const bu_step* s, size_t chart, bu_poly** out) {
    return guarded([&] {
        require(out, "null argument");
        *out = new bu_poly{chart_of(s, chart).exceptional_generator()};
    });
}

bu_status bu_step_to_json(const bu_step* s, char** out) {
    return guarded([&] {
        require(s && out, "null argument");
        *out = dup_string(step_to_json(s->step).dump());
    });
}

bu_status bu_total_transform(const bu_step* s, size_t chart, const bu_ideal* i, bu_ideal** out) {
    return guarded([&] {
        require(i && out, "null argument");
        *out = new bu_ideal{total_transform(chart_of(s, chart), i->ideal)};
    });
}

bu_status bu_strict_transform(const bu_step* s, size_t chart, const bu_ideal* i,
                              bu_ideal** out) {
    return guarded([&] {
        require(i && out, "null argument");
        *out = new bu_ideal{strict_transform(chart_of(s, chart), i->ideal)};
    });
}

bu_status bu_controlled_transform(const bu_step* s, size_t chart, const bu_ideal* i,
                                  unsigned control, bu_ideal** out) {
    return guarded([&] {
        require(i && out, "null argument");
        *out = new bu_ideal{controlled_transform(chart_of(s, chart), i->ideal, control)};
    });
}

bu_status bu_verify_principal_on_chart(const bu_step* s, size_t chart, const bu_ideal* i,
                                       int* out) {
    return guarded([&] {
        require(i && out, "null argument");
        *out = verify_principal_on_chart(chart_of(s, chart), i->ideal) ? 1 : 0;
    });
}

bu_status bu_divisor_create(const bu_ideal* relations, const bu_poly* const* factors,
                            const unsigned* multiplicities, size_t nfactors, bu_divisor** out) {
    return guarded([&] {
        require(factors && out, "null argument");
        std::vector<DivisorFactor> fs;
        for (size_t i = 0; i < nfactors; ++i) {
            require(factors[i], "null factor");
            fs.push_back({factors[i]->poly, multiplicities ? multiplicities[i] : 1, ""});
        }
        *out = new bu_divisor{make_divisor(presentation_of(relations), std::move(fs))};
    });
}

void bu_divisor_free(bu_divisor* d) { delete d; }

bu_status bu_snc_check(const bu_divisor* d, char** verdict_json) {
    return guarded([&] {
        require(d && verdict_json, "null argument");
        *verdict_json = dup_string(snc_verdict_to_json(snc_check_global(d->divisor)).dump());
    });
}

bu_status bu_snc_check_at_point(const bu_divisor* d, const char* const* coords, size_t ncoords,
                                char** verdict_json) {
    return guarded([&] {
        require(d && coords && verdict_json, "null argument");
        std::vector<Rational> p;
        for (size_t i = 0; i < ncoords; ++i) p.push_back(parse_rational(coords[i]));
        *verdict_json =
            dup_string(snc_verdict_to_json(snc_check_at_point(d->divisor, p)).dump());
    });
}

bu_status bu_monomial_check(const bu_divisor* d, int* out) {
    return guarded([&] {
        require(d && out, "null argument");
        *out = monomial_check(d->divisor) ? 1 : 0;
    });
}

bu_status bu_separate_components(const bu_ideal* relations, const bu_ideal* left,
                                 const bu_ideal* right, int* separated, bu_step** out) {
    return guarded([&] {
        require(left && right && separated, "null argument");
        auto [step, sep] =
            separate_components(presentation_of(relations), left->ideal, right->ideal);
        *separated = sep ? 1 : 0;
        if (out) *out = new bu_step{std::move(step)};
    });
}

bu_status bu_strnorm_surface(const bu_divisor* d, unsigned max_steps, char** result_json) {
    return guarded([&] {
        require(d && result_json, "null argument");
        auto result = strnorm_surface(d->divisor, max_steps);
        *result_json = dup_string(strnorm_to_json(result).dump());
    });
}

bu_status bu_principalize(const bu_ideal* relations, const bu_ideal* ideal,
                          const bu_ideal* inside, unsigned n_max, char** result_json) {
    return guarded([&] {
        require(ideal && inside && result_json, "null argument");
        auto result = principalize_strict_transform(presentation_of(relations), ideal->ideal,
                                                    inside->ideal, n_max);
        *result_json = dup_string(principalization_to_json(result).dump());
    });
}

bu_status bu_separate_principalize(const bu_ideal* relations, const bu_ideal* left,
                                   const bu_ideal* right, unsigned n_max, char** result_json) {
    return guarded([&] {
        require(left && right && result_json, "null argument");
        auto result = separate_and_principalize(presentation_of(relations), left->ideal,
                                                right->ideal, n_max);
        *result_json = dup_string(principalization_to_json(result).dump());
    });
}

bu_status bu_resolve_plane_curve(const bu_poly* curve, unsigned max_steps, char** trace_json) {
    return guarded([&] {
        require(curve && trace_json, "null argument");
        auto trace = resolve_plane_curve(curve->poly, max_steps);
        *trace_json = dup_string(trace_to_json(trace).dump(2));
    });
}

bu_status bu_trace_summary(const char* trace_json, char** summary_text) {
    return guarded([&] {
        require(trace_json && summary_text, "null argument");
        auto trace = trace_from_json(Json::parse(trace_json));
        *summary_text = dup_string(trace_summary(trace));
    });
}

bu_status bu_verify_trace(const char* trace_json, int* ok, char** report) {
    return guarded([&] {
        require(trace_json && ok, "null argument");
        auto trace = trace_from_json(Json::parse(trace_json));
        std::string rep;
        *ok = verify_resolution(trace, &rep) ? 1 : 0;
        if (report) *report = dup_string(rep);
    });
}

} // extern "C"
