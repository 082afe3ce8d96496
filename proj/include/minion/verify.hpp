#pragma once

#include "classify.hpp"
#include "closure.hpp"
#include "lattice.hpp"
#include "stability_data.hpp"

#include <atomic>
#include <thread>

namespace minion
{

/*! \brief Bound of a stability search: clone member arity k, class member arity m. */
struct stability_bound
{
  unsigned k = 3;
  unsigned m = 3;
};

/*! \brief A composite that leaves the class.

  `star`: composite = outer * inner[0].  `minor`: composite = minor(outer, sigma).
  `left`: composite = outer(inner[0], ..., inner[k-1]).
*/
struct stability_witness
{
  enum class form : uint8_t
  {
    star,
    minor,
    left
  };
  form kind;
  truth_table outer;
  std::vector<truth_table> inner;
  std::optional<arg_map> sigma;
  truth_table composite;
};

struct stability_verdict
{
  enum class kind_t : uint8_t
  {
    holds_at_bound,
    counterexample
  };
  kind_t kind;
  stability_bound bound;
  std::optional<stability_witness> witness;

  bool holds() const noexcept { return kind == kind_t::holds_at_bound; }
};

/*! \brief Recomputes the composite of a witness and confirms it lies outside K. */
inline bool replays( const stability_witness& w, class_id K )
{
  truth_table c;
  switch ( w.kind )
  {
  case stability_witness::form::star: c = star( w.outer, w.inner.at( 0 ) ); break;
  case stability_witness::form::minor: c = minor( w.outer, *w.sigma ); break;
  case stability_witness::form::left: c = compose( w.outer, w.inner ); break;
  }
  return c == w.composite && !class_member( K, c );
}

namespace detail
{

inline void check_bound( const stability_bound& b )
{
  if ( b.k < 1u || b.k > 3u || b.m < 1u || b.m > 3u )
    throw arity_error( "stability bound must lie in 1..3 for both arities" );
}

/* a minor-violation witness for K at arities <= m, if any */
inline std::optional<stability_witness> minor_violation( class_id K, unsigned m )
{
  for ( unsigned n = 1; n <= m; ++n )
    for ( const auto& f : enumerate_class( K, n ) )
      for ( unsigned t = 1; t <= m; ++t )
      {
        std::optional<stability_witness> hit;
        for_each_arg_map( n, t, [&]( const arg_map& s ) {
          if ( hit )
            return;
          auto g = minor( f, s );
          if ( !class_member_fast( K, g ) )
            hit = stability_witness{ stability_witness::form::minor, f, {}, s, g };
        } );
        if ( hit )
          return hit;
      }
  return std::nullopt;
}

} // namespace detail

/*! \brief Searches f in K, g in C within the bound for a minor or f * g outside K. */
inline stability_verdict check_right_stability( class_id K, clone_id C, stability_bound b = {} )
{
  detail::check_bound( b );
  if ( auto w = detail::minor_violation( K, b.m ) )
    return { stability_verdict::kind_t::counterexample, b, w };
  for ( unsigned n = 1; n <= b.m; ++n )
  {
    const auto fs = enumerate_class( K, n );
    for ( unsigned j = 1; j <= b.k; ++j )
    {
      const auto gs = clone_members( C, j );
      for ( const auto& f : fs )
        for ( const auto& g : gs )
        {
          const auto c = star( f, g );
          if ( !class_member_fast( K, c ) )
            return { stability_verdict::kind_t::counterexample, b,
                     stability_witness{ stability_witness::form::star, f, { g }, std::nullopt, c } };
        }
    }
  }
  return { stability_verdict::kind_t::holds_at_bound, b, std::nullopt };
}

/*! \brief Exhaustive left search: every g in C applied to every tuple of members of K. */
inline stability_verdict check_left_stability_brute( class_id K, clone_id C, stability_bound b )
{
  detail::check_bound( b );
  for ( unsigned n = 1; n <= b.m; ++n )
  {
    const auto fs = enumerate_class( K, n ).members();
    if ( fs.empty() )
      continue;
    for ( unsigned j = 1; j <= b.k; ++j )
      for ( const auto& g : clone_members( C, j ) )
      {
        std::vector<std::size_t> idx( j, 0 );
        std::vector<truth_table> args( j, fs[0] );
        while ( true )
        {
          const auto c = compose( g, args );
          if ( !class_member_fast( K, c ) )
            return { stability_verdict::kind_t::counterexample, b,
                     stability_witness{ stability_witness::form::left, g, args, std::nullopt, c } };
          std::size_t i = j;
          while ( i > 0 && idx[i - 1] + 1 == fs.size() )
          {
            idx[i - 1] = 0;
            args[i - 1] = fs[0];
            --i;
          }
          if ( i == 0 )
            break;
          args[i - 1] = fs[++idx[i - 1]];
        }
      }
  }
  return { stability_verdict::kind_t::holds_at_bound, b, std::nullopt };
}

/*! \brief Searches g in C and f_1..f_j in K within the bound for g(f_1..f_j) outside K.

  When a slice of K equals its binary closure it is the set of tables obeying its
  pair projections, so g maps tuples of the slice into the slice exactly when g
  preserves each pair projection. That test is run instead of enumerating tuples;
  a failing pair yields an explicit witness. Slices without this property fall
  back to the exhaustive search.
*/
inline stability_verdict check_left_stability( class_id K, clone_id C, stability_bound b = {} )
{
  detail::check_bound( b );
  for ( unsigned n = 1; n <= b.m; ++n )
  {
    const auto S = enumerate_class( K, n );
    if ( S.empty() )
      continue;
    if ( binary_closure( S ) != S )
    {
      auto v = check_left_stability_brute( K, C, { b.k, n } );
      if ( !v.holds() )
        return { v.kind, b, v.witness };
      continue;
    }
    const unsigned rows = 1u << n;
    const auto proj = pair_projections( S );
    for ( unsigned j = 1; j <= b.k; ++j )
      for ( const auto& g : clone_members( C, j ) )
        for ( unsigned r1 = 0; r1 < rows; ++r1 )
          for ( unsigned r2 = r1 + 1; r2 < rows; ++r2 )
          {
            const uint8_t rho = proj[r1 * rows + r2];
            std::vector<unsigned> pairs;
            for ( unsigned p = 0; p < 4; ++p )
              if ( ( rho >> p ) & 1u )
                pairs.push_back( p );
            /* every j-tuple of allowed pairs */
            std::vector<std::size_t> idx( j, 0 );
            while ( true )
            {
              uint64_t x = 0, y = 0;
              for ( unsigned t = 0; t < j; ++t )
              {
                x = ( x << 1 ) | ( pairs[idx[t]] >> 1 );
                y = ( y << 1 ) | ( pairs[idx[t]] & 1u );
              }
              const unsigned out = 2u * g[x] + g[y];
              if ( !( ( rho >> out ) & 1u ) )
              {
                std::vector<truth_table> args;
                for ( unsigned t = 0; t < j; ++t )
                {
                  const unsigned want = pairs[idx[t]];
                  for ( const auto& f : S )
                    if ( 2u * f[r1] + f[r2] == want )
                    {
                      args.push_back( f );
                      break;
                    }
                }
                const auto c = compose( g, args );
                return { stability_verdict::kind_t::counterexample, b,
                         stability_witness{ stability_witness::form::left, g, args, std::nullopt, c } };
              }
              std::size_t i = j;
              while ( i > 0 && idx[i - 1] + 1 == pairs.size() )
                idx[--i] = 0;
              if ( i == 0 )
                break;
              ++idx[i - 1];
            }
          }
  }
  return { stability_verdict::kind_t::holds_at_bound, b, std::nullopt };
}

/*! \brief Right stability of K against a finite generator set: f * g in K for f in K (arity <= m), g in G. */
inline bool right_stable_under( class_id K, const std::vector<truth_table>& G, unsigned m )
{
  for ( unsigned n = 1; n <= m; ++n )
    for ( const auto& f : enumerate_class( K, n ) )
      for ( const auto& g : G )
        if ( !class_member_fast( K, star( f, g ) ) )
          return false;
  return true;
}

/*! \brief First minor of a member of K at arity <= m_max (<= 4) that leaves K.

  Arities up to 3 try every map. At arity 4 the check uses adjacent swaps,
  merging the last two arguments, and appending a fictitious argument; every
  map between arities <= 4 factors through these without leaving that range.
*/
inline std::optional<std::string> minor_closure_violation( class_id K, unsigned m_max = 4 )
{
  if ( m_max < 1u || m_max > 4u )
    throw arity_error( "minor_closure_violation: arity must be in 1..4" );
  auto report = [&]( const truth_table& f, const arg_map& s, const truth_table& g ) {
    std::string img;
    for ( auto v : s.image() )
      img += std::to_string( v );
    return K.name() + ": minor " + img + " of " + format( f ) + " is " + format( g );
  };
  const unsigned full = std::min( m_max, 3u );
  for ( unsigned n = 1; n <= full; ++n )
    for ( const auto& f : enumerate_class( K, n ) )
      for ( unsigned t = 1; t <= full; ++t )
      {
        std::optional<std::string> hit;
        for_each_arg_map( n, t, [&]( const arg_map& s ) {
          if ( hit )
            return;
          const auto g = minor( f, s );
          if ( !class_member_fast( K, g ) )
            hit = report( f, s, g );
        } );
        if ( hit )
          return hit;
      }
  if ( m_max < 4u )
    return std::nullopt;
  for ( unsigned n = 1; n <= 4u; ++n )
  {
    std::vector<arg_map> moves;
    for ( unsigned i = 1; i < n; ++i )
    {
      auto img = arg_map::identity( n ).image();
      std::swap( img[i - 1], img[i] );
      moves.emplace_back( img, n );
    }
    if ( n >= 2u )
    {
      auto img = arg_map::identity( n ).image();
      img[n - 1] = n - 1u;
      moves.emplace_back( img, n - 1u );
    }
    if ( n < 4u )
      moves.emplace_back( arg_map::identity( n ).image(), n + 1u );
    std::optional<std::string> hit;
    class_bitmap( K, n ).for_each( [&]( const truth_table& f ) {
      for ( const auto& s : moves )
      {
        if ( hit )
          return;
        const auto g = minor( f, s );
        if ( !class_member_fast( K, g ) )
          hit = report( f, s, g );
      }
    } );
    if ( hit )
      return hit;
  }
  return std::nullopt;
}

/*! \brief Checks that each slice of K up to m_max (<= 4) equals its binary closure.

  A slice with this property is closed under pointwise majority. Returns a
  description of the first slice that differs.
*/
inline std::optional<std::string> majority_closure_violation( class_id K, unsigned m_max = 4 )
{
  for ( unsigned m = 1; m <= m_max; ++m )
  {
    const auto S = enumerate_class( K, m );
    const auto B = binary_closure( S );
    if ( B != S )
    {
      for ( const auto& f : B )
        if ( !S.contains( f ) )
          return K.name() + ": arity " + std::to_string( m ) + " slice misses " + format( f ) + " from its binary closure";
    }
  }
  return std::nullopt;
}

/*! \brief Right and left clone columns for one class. */
struct table_row
{
  class_id cls;
  clone_id right_clone;
  clone_id left_clone;
};

/*! \brief Stability table rows in roster order. */
inline const std::vector<table_row>& table2()
{
  static const auto rows = [] {
    std::vector<table_row> v( roster().size() );
    std::vector<bool> seen( roster().size() );
    for ( const auto& r : data::table2_text() )
    {
      const auto c = class_id::from_name( r.cls );
      if ( seen[c.index()] )
        throw inconsistency_error( "duplicate table row for " + c.name() );
      seen[c.index()] = true;
      v[c.index()] = { c, clone_id::from_name( r.right ), clone_id::from_name( r.left ) };
    }
    if ( std::find( seen.begin(), seen.end(), false ) != seen.end() )
      throw inconsistency_error( "stability table does not cover the roster" );
    return v;
  }();
  return rows;
}

inline const table_row& table2_row( class_id c )
{
  return table2()[c.index()];
}

/*! \brief Classes K with c1 below K's right clone and c2 below K's left clone; requires SM <= c2. */
inline std::vector<class_id> stable_classes_for( clone_id c1, clone_id c2 )
{
  if ( !clone_leq( clone_id::from_name( "SM" ), c2 ) )
    throw std::invalid_argument( "stable_classes_for: outer clone " + c2.name() + " does not contain SM" );
  std::vector<class_id> out;
  for ( const auto& r : table2() )
    if ( clone_leq( c1, r.right_clone ) && clone_leq( c2, r.left_clone ) )
      out.push_back( r.cls );
  return out;
}

enum class side : uint8_t
{
  right,
  left
};

struct table2_entry
{
  class_id cls;
  clone_id clone;
  side which;
  bool expected;
  stability_verdict verdict;

  bool matches() const noexcept { return expected == verdict.holds(); }
};

struct table2_report
{
  stability_bound bound;
  std::vector<table2_entry> entries; /*!< sorted by class, clone, side */

  std::size_t mismatches() const
  {
    return static_cast<std::size_t>( std::count_if( entries.begin(), entries.end(), []( const auto& e ) { return !e.matches(); } ) );
  }
};

/*! \brief Runs both searches for every class and clone; rows are checked in parallel. */
inline table2_report verify_table2( stability_bound b = {}, unsigned threads = 0 )
{
  detail::check_bound( b );
  /* warm caches before fanning out */
  for ( unsigned m = 1; m <= 4; ++m )
  {
    class_bitmap( class_id( 0 ), m );
    clone_bitmap( clone_id( 0 ), m );
  }
  (void)detail::clone_order();
  (void)table2();

  const auto classes = all_classes();
  std::vector<std::vector<table2_entry>> per_class( classes.size() );
  std::atomic<std::size_t> next{ 0 };
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try
    {
      for ( std::size_t i; ( i = next.fetch_add( 1 ) ) < classes.size(); )
      {
        const auto K = classes[i];
        const auto& row = table2_row( K );
        for ( auto C : all_clones() )
        {
          per_class[i].push_back( { K, C, side::right, clone_leq( C, row.right_clone ), check_right_stability( K, C, b ) } );
          per_class[i].push_back( { K, C, side::left, clone_leq( C, row.left_clone ), check_left_stability( K, C, b ) } );
        }
      }
    }
    catch ( ... )
    {
      std::lock_guard lock( error_mutex );
      error = std::current_exception();
    }
  };
  const unsigned n = threads ? threads : std::max( 1u, std::thread::hardware_concurrency() );
  std::vector<std::thread> pool;
  for ( unsigned t = 0; t < n; ++t )
    pool.emplace_back( worker );
  for ( auto& t : pool )
    t.join();
  if ( error )
    std::rethrow_exception( error );

  table2_report rep{ b, {} };
  for ( auto& v : per_class )
    rep.entries.insert( rep.entries.end(), v.begin(), v.end() );
  return rep;
}

struct check_result
{
  std::string name;
  bool passed;
  std::string detail;
};

/*! \brief Checks of the roster itself: size, distinctness, closure, automorphisms, named generation facts. */
inline std::vector<check_result> roster_checks()
{
  std::vector<check_result> out;

  {
    std::vector<std::string> names;
    for ( const auto& r : roster() )
      names.push_back( r.name );
    std::sort( names.begin(), names.end() );
    const bool distinct = std::adjacent_find( names.begin(), names.end() ) == names.end();
    out.push_back( { "roster-count", roster().size() == roster_size && distinct,
                     std::to_string( roster().size() ) + " classes, names " + ( distinct ? "distinct" : "repeated" ) } );
  }

  std::optional<class_lattice> lat;
  for ( unsigned m = 3; m <= 4 && !lat; ++m )
  {
    try
    {
      lat = build_lattice( m );
    }
    catch ( const inconsistency_error& )
    {
    }
  }
  out.push_back( { "distinct-slices", lat.has_value(),
                   lat ? "pairwise distinct up to arity " + std::to_string( lat->decision_arity() ) : "duplicate slices up to arity 4" } );

  {
    std::string bad;
    for ( auto c : all_classes() )
      if ( auto v = minor_closure_violation( c, 4 ) )
      {
        bad = *v;
        break;
      }
    out.push_back( { "minor-closure", bad.empty(), bad.empty() ? "all slices up to arity 4" : bad } );
  }
  {
    std::string bad;
    for ( auto c : all_classes() )
      if ( auto v = majority_closure_violation( c, 4 ) )
      {
        bad = *v;
        break;
      }
    out.push_back( { "majority-closure", bad.empty(), bad.empty() ? "all slices up to arity 4" : bad } );
  }

  if ( lat )
  {
    const auto images = automorphism_images( lat->decision_arity() );
    const char* names[] = { "negation", "inner-negation", "duality" };
    for ( std::size_t a = 0; a < 3; ++a )
    {
      bool ok = is_order_automorphism( *lat, images[a] );
      for ( auto c : all_classes() )
        ok = ok && images[a][images[a][c.index()].index()] == c;
      out.push_back( { std::string( "automorphism-" ) + names[a], ok, ok ? "order-preserving involution" : "not an order automorphism" } );
    }
    bool pairing = true;
    for ( const auto& [x, y] : data::table_pairs() )
      pairing = pairing && images[0][class_id::from_name( x ).index()] == class_id::from_name( y );
    for ( auto x : data::table_singles() )
      pairing = pairing && images[0][class_id::from_name( x ).index()] == class_id::from_name( x );
    out.push_back( { "negation-pairing", pairing, pairing ? "matches the stability table pairing" : "differs from the stability table pairing" } );
  }

  {
    const auto f = []( std::string_view n ) { return named_function( n ); };
    const std::vector<std::pair<std::vector<truth_table>, std::string_view>> facts = {
        { {}, "Empty" },
        { { f( "maj" ) }, "SM" },
        { { f( "and" ) }, "McU" },
        { { f( "xor" ) }, "Refl_00" },
        { { f( "id" ), f( "not" ) }, "S" },
        { { f( "const0" ), f( "const1" ), f( "id" ), f( "not" ) }, "Omega" } };
    std::string bad;
    for ( const auto& [F, want] : facts )
    {
      const auto got = generated_class( F ).name();
      if ( got != want && bad.empty() )
        bad = "expected " + std::string( want ) + ", got " + got;
    }
    out.push_back( { "generation-facts", bad.empty(), bad.empty() ? "6 named generating sets" : bad } );
  }
  return out;
}

} // namespace minion
