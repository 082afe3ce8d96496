#pragma once

/* Reference implementations for the tests. Everything here works tuple by tuple on
   explicit vectors and shares no code with the library beyond the truth_table
   constructor, so agreement is meaningful. */

#include <minion/truth_table.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle
{

using tuple = std::vector<int>;

/* all tuples of length n in row order (a_1 most significant) */
inline std::vector<tuple> tuples( unsigned n )
{
  std::vector<tuple> out;
  for ( unsigned r = 0; r < ( 1u << n ); ++r )
  {
    tuple t( n );
    for ( unsigned i = 0; i < n; ++i )
      t[i] = ( r >> ( n - 1u - i ) ) & 1u;
    out.push_back( t );
  }
  return out;
}

inline unsigned index_of( const tuple& a )
{
  unsigned r = 0;
  for ( int v : a )
    r = 2u * r + static_cast<unsigned>( v );
  return r;
}

inline int at( const minion::truth_table& f, const tuple& a )
{
  return static_cast<int>( ( f.bits() >> index_of( a ) ) & 1u );
}

template<typename Fn>
minion::truth_table tabulate( unsigned n, Fn&& fn )
{
  uint64_t bits = 0;
  for ( const auto& a : tuples( n ) )
    if ( fn( a ) )
      bits |= uint64_t( 1 ) << index_of( a );
  return minion::truth_table( n, bits );
}

inline tuple complement( tuple a )
{
  for ( auto& v : a )
    v = 1 - v;
  return a;
}

inline bool leq( const tuple& a, const tuple& b )
{
  for ( std::size_t i = 0; i < a.size(); ++i )
    if ( a[i] > b[i] )
      return false;
  return true;
}

/* f_sigma(a) = f(a o sigma); sigma is 1-based */
inline minion::truth_table minor( const minion::truth_table& f, const std::vector<unsigned>& sigma, unsigned m )
{
  return tabulate( m, [&]( const tuple& a ) {
    tuple b;
    for ( auto s : sigma )
      b.push_back( a[s - 1] );
    return at( f, b );
  } );
}

inline minion::truth_table compose( const minion::truth_table& f, const std::vector<minion::truth_table>& gs )
{
  return tabulate( gs.at( 0 ).arity(), [&]( const tuple& a ) {
    tuple b;
    for ( const auto& g : gs )
      b.push_back( at( g, a ) );
    return at( f, b );
  } );
}

inline minion::truth_table star( const minion::truth_table& f, const minion::truth_table& g )
{
  const unsigned m = g.arity(), n = f.arity();
  return tabulate( m + n - 1u, [&]( const tuple& a ) {
    tuple inner( a.begin(), a.begin() + m );
    tuple b{ at( g, inner ) };
    b.insert( b.end(), a.begin() + m, a.end() );
    return at( f, b );
  } );
}

inline minion::truth_table maj3( const minion::truth_table& f, const minion::truth_table& g, const minion::truth_table& h )
{
  return tabulate( f.arity(), [&]( const tuple& a ) { return at( f, a ) + at( g, a ) + at( h, a ) >= 2; } );
}

/* every map [n] -> [m] */
inline std::vector<std::vector<unsigned>> maps( unsigned n, unsigned m )
{
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> s( n, 1u );
  while ( true )
  {
    out.push_back( s );
    int i = static_cast<int>( n ) - 1;
    while ( i >= 0 && s[i] == m )
      s[i--] = 1u;
    if ( i < 0 )
      return out;
    ++s[i];
  }
}

inline std::set<minion::truth_table> all_minors( const minion::truth_table& f, unsigned m )
{
  std::set<minion::truth_table> out;
  for ( const auto& s : maps( f.arity(), m ) )
    out.insert( oracle::minor( f, s, m ) );
  return out;
}

/* predicates, literally */
inline bool monotone( const minion::truth_table& f )
{
  for ( const auto& a : tuples( f.arity() ) )
    for ( const auto& b : tuples( f.arity() ) )
      if ( leq( a, b ) && at( f, a ) > at( f, b ) )
        return false;
  return true;
}

inline bool self_dual( const minion::truth_table& f )
{
  for ( const auto& a : tuples( f.arity() ) )
    if ( at( f, a ) == at( f, complement( a ) ) )
      return false;
  return true;
}

inline bool reflexive( const minion::truth_table& f )
{
  for ( const auto& a : tuples( f.arity() ) )
    if ( at( f, a ) != at( f, complement( a ) ) )
      return false;
  return true;
}

/* any k true points (with repetition) share a coordinate equal to 1 */
inline bool sep1( const minion::truth_table& f, unsigned k )
{
  std::vector<tuple> ones;
  for ( const auto& a : tuples( f.arity() ) )
    if ( at( f, a ) )
      ones.push_back( a );
  std::vector<std::size_t> idx( k, 0 );
  if ( ones.empty() )
    return true;
  while ( true )
  {
    bool common = false;
    for ( unsigned i = 0; i < f.arity() && !common; ++i )
    {
      bool all = true;
      for ( auto j : idx )
        all = all && ones[j][i] == 1;
      common = all;
    }
    if ( !common )
      return false;
    std::size_t p = k;
    while ( p > 0 && idx[p - 1] + 1 == ones.size() )
      idx[--p] = 0;
    if ( p == 0 )
      return true;
    ++idx[p - 1];
  }
}

inline bool sep0( const minion::truth_table& f, unsigned k )
{
  return sep1( tabulate( f.arity(), [&]( const tuple& a ) { return !at( f, complement( a ) ); } ), k );
}

inline bool smin( const minion::truth_table& f )
{
  for ( const auto& a : tuples( f.arity() ) )
    if ( at( f, a ) && at( f, complement( a ) ) )
      return false;
  return true;
}

/* naive majority fixpoint: add every pointwise majority of three members until nothing changes */
inline std::set<minion::truth_table> majority_fixpoint( std::set<minion::truth_table> s )
{
  while ( true )
  {
    std::vector<minion::truth_table> v( s.begin(), s.end() );
    const auto before = s.size();
    for ( const auto& a : v )
      for ( const auto& b : v )
        for ( const auto& c : v )
          s.insert( oracle::maj3( a, b, c ) );
    if ( s.size() == before )
      return s;
  }
}

/* slice of the class generated by F: minors of F at arity m, closed under majority */
inline std::set<minion::truth_table> generated_slice( const std::vector<minion::truth_table>& F, unsigned m )
{
  std::set<minion::truth_table> s;
  for ( const auto& f : F )
  {
    auto mi = oracle::all_minors( f, m );
    s.insert( mi.begin(), mi.end() );
  }
  return majority_fixpoint( s );
}

inline minion::truth_table random_table( std::mt19937_64& rng, unsigned n )
{
  return minion::truth_table( n, rng() );
}

} // namespace oracle
