#pragma once

#include "classify.hpp"
#include "verify.hpp"

#include <json.hpp>

namespace minion::io
{

using json = nlohmann::ordered_json;

inline json to_json( const fn_set& s )
{
  json a = json::array();
  for ( const auto& f : s )
    a.push_back( format( f ) );
  return a;
}

inline json to_json( const arg_map& s )
{
  return s.image();
}

inline const char* to_string( generator_source s )
{
  switch ( s )
  {
  case generator_source::none: return "none";
  case generator_source::quoted: return "quoted";
  case generator_source::dualized: return "dualized";
  case generator_source::external: return "external";
  }
  return "?";
}

/*! \brief The shipped roster file: classes with expressions and table columns, clones, and stable-class lists. */
inline json roster_json()
{
  json classes = json::array();
  for ( const auto& r : table2() )
    classes.push_back( { { "name", r.cls.name() },
                         { "expr", r.cls.expr().to_string() },
                         { "right_clone", r.right_clone.name() },
                         { "left_clone", r.left_clone.name() } } );
  json cl = json::array();
  for ( auto c : all_clones() )
  {
    json e = { { "name", c.name() }, { "predicate", c.predicate().to_string() } };
    if ( const auto& g = c.generators() )
    {
      json gs = json::array();
      for ( const auto& f : *g )
        gs.push_back( format( f ) );
      e["generators"] = gs;
    }
    e["generator_source"] = to_string( c.info().source );
    cl.push_back( e );
  }
  json lists = json::array();
  for ( const auto& l : data::stable_lists() )
  {
    json names = json::array();
    if ( l.all )
      for ( auto c : all_classes() )
        names.push_back( c.name() );
    else
      for ( auto n : l.classes )
        names.push_back( std::string( n ) );
    lists.push_back( { { "c1", l.c1 }, { "c2", l.c2 }, { "classes", names } } );
  }
  return { { "classes", classes }, { "clones", cl }, { "stable_lists", lists } };
}

inline json clone_order_json()
{
  json names = json::array(), leq = json::array();
  for ( auto c : all_clones() )
  {
    names.push_back( c.name() );
    for ( auto d : all_clones() )
      if ( c != d && clone_leq( c, d ) )
        leq.push_back( { c.name(), d.name() } );
  }
  return { { "clones", names }, { "decision_arity", clone_order_arity }, { "leq", leq } };
}

inline json lattice_json( const class_lattice& l )
{
  json nodes = json::array(), leq = json::array(), covers = json::array(), mi = json::array();
  for ( auto a : all_classes() )
  {
    nodes.push_back( a.name() );
    for ( auto b : all_classes() )
      if ( a != b && l.leq( a, b ) )
        leq.push_back( { a.name(), b.name() } );
  }
  for ( const auto& [lo, hi] : l.covers() )
    covers.push_back( { lo.name(), hi.name() } );
  for ( auto c : l.meet_irreducibles() )
    mi.push_back( c.name() );
  return { { "decision_arity", l.decision_arity() },
           { "nodes", nodes },
           { "leq", leq },
           { "covers", covers },
           { "meet_irreducibles", mi } };
}

inline json to_json( const decomposition& d )
{
  json phis = json::array();
  for ( const auto& p : d.phis )
    phis.push_back( { { "gen_index", p.gen_index }, { "sigma", to_json( p.sigma ) }, { "table", format( p.table ) } } );
  return { { "h", d.h.format() }, { "phis", phis } };
}

inline json to_json( const bisect_result& b, unsigned n )
{
  json fam = json::array(), wit = json::array();
  for ( const auto& p : b.family )
    fam.push_back( format( p.table ) );
  for ( const auto& w : b.witnesses )
    wit.push_back( { { "condition", std::string( 1, w.condition ) },
                     { "a", format_tuple( w.a, n ) },
                     { "b", format_tuple( w.b, n ) },
                     { "tau", w.tau } } );
  json j = { { "bisectable", b.bisectable }, { "family", fam }, { "witnesses", wit } };
  if ( b.failure )
    j["failure"] = { { "condition", std::string( 1, b.failure->condition ) },
                     { "a", format_tuple( b.failure->a, n ) },
                     { "b", format_tuple( b.failure->b, n ) } };
  return j;
}

inline json to_json( const stability_verdict& v )
{
  json j = { { "kind", v.holds() ? "holds_at_bound" : "counterexample" }, { "bound", { v.bound.k, v.bound.m } } };
  if ( v.witness )
  {
    const auto& w = *v.witness;
    json inner = json::array();
    for ( const auto& f : w.inner )
      inner.push_back( format( f ) );
    const char* form = w.kind == stability_witness::form::star ? "star" : w.kind == stability_witness::form::minor ? "minor" : "left";
    j["witness"] = { { "form", form }, { "outer", format( w.outer ) }, { "inner", inner }, { "composite", format( w.composite ) } };
    if ( w.sigma )
      j["witness"]["sigma"] = to_json( *w.sigma );
  }
  return j;
}

inline json to_json( const table2_report& r )
{
  json entries = json::array();
  for ( const auto& e : r.entries )
    entries.push_back( { { "class", e.cls.name() },
                         { "clone", e.clone.name() },
                         { "side", e.which == side::right ? "right" : "left" },
                         { "expected", e.expected },
                         { "verdict", to_json( e.verdict ) } } );
  return { { "bound", { r.bound.k, r.bound.m } }, { "mismatches", r.mismatches() }, { "entries", entries } };
}

} // namespace minion::io
