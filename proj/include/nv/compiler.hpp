/*!
  \file compiler.hpp
  \brief Compiles a boolean circuit into a word that simulates its
  input-output function: a word w_C with w_C(0 x) = 0 f_C(x) x.

  The construction is slice by slice.  Each slice word is assembled gate
  by gate (NOT/ID, AND/OR, FORK cases) behind the slice's input-wire
  permutation; the full word clears intermediate slice outputs by running
  the inverted prefix of slice words, a standard reversible-computing
  step.
*/

#pragma once

#include "circuit.hpp"
#include "word.hpp"

#include <numeric>

namespace nv
{

/*! The gate simulators: phi_not swaps the leading bit, phi_or / phi_and
    replace the leading bit by the gate value of the next two, phi_0f
    rebalances {0,10,11} onto {00,01,1}, and phi_f = tau12 o phi_or o
    phi_0f duplicates the bit after a leading 0. */
struct builtin_gate_tables
{
  table phi_not;
  table phi_or;
  table phi_and;
  table phi_zero_fork;
  table phi_fork;
  table tau12;
};

namespace detail
{

inline table boolean_gate_table( bool is_or )
{
  signature sig{ 1, 2 };
  table::pair_list ps;
  for ( int lead = 0; lead < 2; ++lead )
  {
    for ( int x1 = 0; x1 < 2; ++x1 )
    {
      for ( int x2 = 0; x2 < 2; ++x2 )
      {
        int v = is_or ? ( x1 | x2 ) : ( x1 & x2 );
        int out = lead == 0 ? v : 1 - v;
        std::string d{ static_cast<char>( '0' + lead ), static_cast<char>( '0' + x1 ), static_cast<char>( '0' + x2 ) };
        std::string i{ static_cast<char>( '0' + out ), static_cast<char>( '0' + x1 ), static_cast<char>( '0' + x2 ) };
        ps.emplace_back( ntuple( sig, { d } ), ntuple( sig, { i } ) );
      }
    }
  }
  return table( sig, std::move( ps ) );
}

} // namespace detail

inline builtin_gate_tables builtin_tables()
{
  signature sig{ 1, 2 };
  table phi_not( sig, { { ntuple( sig, { "0" } ), ntuple( sig, { "1" } ) },
                        { ntuple( sig, { "1" } ), ntuple( sig, { "0" } ) } } );
  table phi_or = detail::boolean_gate_table( true );
  table phi_and = detail::boolean_gate_table( false );
  table phi_zero_fork( sig, { { ntuple( sig, { "0" } ), ntuple( sig, { "00" } ) },
                              { ntuple( sig, { "10" } ), ntuple( sig, { "01" } ) },
                              { ntuple( sig, { "11" } ), ntuple( sig, { "1" } ) } } );
  table tau12 = tau_table( sig, 1 );
  table phi_fork = max_extension_v( compose( tau12, compose( phi_or, phi_zero_fork ) ) );
  return { std::move( phi_not ), std::move( phi_or ), std::move( phi_and ),
           std::move( phi_zero_fork ), std::move( phi_fork ), std::move( tau12 ) };
}

/*! Registry holding the builtin gate simulators under the names the
    compiler emits. */
inline generator_registry compiler_registry()
{
  auto b = builtin_tables();
  return generator_registry( signature{ 1, 2 },
                             { { "phi_not", b.phi_not },
                               { "phi_or", b.phi_or },
                               { "phi_and", b.phi_and },
                               { "phi_0f", b.phi_zero_fork },
                               { "phi_f", b.phi_fork } } );
}

namespace detail
{

/*! sigma_{i,j} = tau_{j-1,j} ... tau_{i,i+1} in display order: the left
    rotation of string positions [i..j]. */
inline word rotation_word( int i, int j )
{
  word w;
  for ( int t = j - 1; t >= i; --t )
    w.push_back( tau_token( t ) );
  return w;
}

/*! A word realizing a position permutation: the new string position
    `offset + t` receives the old position `offset + targets[t]`
    (0-based targets).  Built from selection-sort transpositions, each
    expanded over adjacent tau. */
inline word position_permutation_word( std::vector<int> const& targets, int offset )
{
  int const w = static_cast<int>( targets.size() );
  std::vector<int> at( static_cast<std::size_t>( w ) ); // at[slot] = current position (0-based)
  std::iota( at.begin(), at.end(), 0 );
  std::vector<int> where( static_cast<std::size_t>( w ) ); // where[pos] = slot currently there
  std::iota( where.begin(), where.end(), 0 );

  std::vector<word> applied; // application order
  for ( int t = 0; t < w; ++t )
  {
    int const want = targets[static_cast<std::size_t>( t )];
    int const cur = at[static_cast<std::size_t>( want )];
    if ( cur == t )
      continue;
    applied.push_back( expand_tau_ij( offset + t, offset + cur ) );
    int const other = where[static_cast<std::size_t>( t )];
    std::swap( where[static_cast<std::size_t>( t )], where[static_cast<std::size_t>( cur )] );
    at[static_cast<std::size_t>( want )] = t;
    at[static_cast<std::size_t>( other )] = cur;
  }
  word out;
  for ( auto it = applied.rbegin(); it != applied.rend(); ++it )
    out = out + *it;
  return out;
}

} // namespace detail

/*! Word simulating one slice: streaming it on 0 x yields 0 f_S(x) x. */
inline word compile_slice( slice const& s )
{
  for ( auto t : s.gates )
  {
    if ( t == gate_type::fredkin )
      throw error( "InvalidSlice", "the gate-by-gate construction covers {NOT, AND, OR, FORK, ID}" );
  }
  if ( static_cast<int>( s.perm.size() ) != s.width_in )
    throw error( "InvalidSlice", "slice permutation does not cover its inputs" );

  word gates_word; // display order, most recent gate leftmost
  int m = 0, n = 0;
  for ( auto t : s.gates )
  {
    word w;
    switch ( t )
    {
    case gate_type::not_gate:
    case gate_type::id:
    {
      w = detail::rotation_word( 2, n + 2 ) + word{ tau_token( 1 ) } + expand_tau_ij( 3, n + m + 3 );
      if ( t == gate_type::not_gate )
        w.push_back( named_token( "phi_not" ) );
      w = w + word{ tau_token( 1 ), named_token( "phi_f" ) } + expand_tau_ij( 2, n + m + 2 );
      m += 1;
      n += 1;
      break;
    }
    case gate_type::and_gate:
    case gate_type::or_gate:
    {
      word forward = expand_tau_ij( 3, n + m + 4 ) + expand_tau_ij( 2, n + m + 3 );
      // with no previous output the trailing 0 sits at position n+m+4,
      // not n+m+3, so the pair runs in the opposite order on the way back
      word backward = n == 0 ? expand_tau_ij( 2, n + m + 3 ) + expand_tau_ij( 3, n + m + 4 ) : forward;
      w = detail::rotation_word( 1, n + 2 ) + backward +
          word{ named_token( t == gate_type::or_gate ? "phi_or" : "phi_and" ) } + forward +
          word{ named_token( "phi_0f" ) };
      m += 2;
      n += 1;
      break;
    }
    case gate_type::fork:
    {
      w = detail::rotation_word( 2, n + 2 ) + detail::rotation_word( 3, n + 3 ) +
          expand_tau_ij( 4, n + m + 4 ) + word{ named_token( "phi_f" ), named_token( "phi_f" ) } +
          expand_tau_ij( 2, n + m + 2 );
      m += 1;
      n += 2;
      break;
    }
    default:
      break;
    }
    gates_word = w + gates_word;
  }
  // the input permutation is applied first, on payload positions 2..w+1;
  // the copied inputs then trail in consumed order, so the inverse
  // permutation is applied to the copy block to restore 0 f(x) x
  word pre = detail::position_permutation_word( s.perm, 2 );
  std::vector<int> unperm( s.perm.size() );
  for ( std::size_t i = 0; i < s.perm.size(); ++i )
    unperm[static_cast<std::size_t>( s.perm[i] )] = static_cast<int>( i );
  word post = detail::position_permutation_word( unperm, n + 2 );
  word out = post + gates_word + pre;

  // every transposition must act inside the live string: the control
  // bit, both wire sets, and the one transient position a gate opens
  int const live = 2 + s.width_in + s.width_out;
  for ( auto const& tok : out )
  {
    if ( tok.type == word_token::kind::tau && tok.index + 1 > live )
      throw error( "InvalidSlice", "transposition index " + std::to_string( tok.index ) + " leaves the live width " + std::to_string( live ) );
  }
  return out;
}

struct compilation_trace
{
  std::vector<word> slice_words; // index 0 = level 1
  word pi1;
  word pi2;
  word final;

  struct size_report
  {
    std::vector<std::uint64_t> slice_word_sizes;
    std::vector<int> slice_sizes;
    std::uint64_t word_size = 0;
    int circuit_size = 0;        // as given
    int strict_circuit_size = 0; // after strictification
  } sizes;
};

namespace detail
{

inline std::uint64_t plain_word_size( word const& w )
{
  std::uint64_t s = 0;
  for ( auto const& tok : w )
    s += tok.type == word_token::kind::tau ? static_cast<std::uint64_t>( tok.index ) + 1 : 1;
  return s;
}

} // namespace detail

/*! The full construction: strictify, compile slices, rotate the final
    outputs behind the inputs, uncompute the interior slices, rotate the
    payload into 0 f(x) x order. */
inline compilation_trace compile_circuit( circuit const& c )
{
  circuit const sc = strictify( c );
  sliced_circuit const parts = slices( sc );
  int const m = sc.inputs();
  int const n = sc.outputs_count();

  compilation_trace tr;
  tr.sizes.circuit_size = c.size();
  tr.sizes.strict_circuit_size = sc.size();
  for ( auto const& s : parts.levels )
  {
    tr.slice_words.push_back( compile_slice( s ) );
    tr.sizes.slice_sizes.push_back( s.size );
    tr.sizes.slice_word_sizes.push_back( detail::plain_word_size( tr.slice_words.back() ) );
  }
  std::size_t const L = tr.slice_words.size();

  // |Z| = 1 + (total number of wires)
  int z = 1 + m;
  for ( auto const& s : parts.levels )
    z += s.width_out;

  for ( int t = 0; t < n; ++t )
    tr.pi1 = tr.pi1 + detail::rotation_word( 2, z );
  for ( int t = 0; t < m; ++t )
    tr.pi2 = tr.pi2 + detail::rotation_word( 2, n + m + 1 );
  if ( !parts.output_aligned() )
    tr.pi2 = detail::position_permutation_word( parts.output_perm, 2 ) + tr.pi2;

  word interior;
  for ( std::size_t l = L - 1; l-- > 0; )
    interior = interior + tr.slice_words[l]; // w_{L-1} ... w_1

  tr.final = tr.pi2 + inverse( interior ) + tr.pi1;
  for ( std::size_t l = L; l-- > 0; )
    tr.final = tr.final + tr.slice_words[l];

  for ( auto const& tok : tr.final )
  {
    if ( tok.type == word_token::kind::tau && tok.index + 1 > z + 1 )
      throw error( "InvalidSlice", "transposition index " + std::to_string( tok.index ) + " exceeds the configuration width" );
  }

  tr.sizes.word_size = detail::plain_word_size( tr.final );
  return tr;
}

struct simulation_check
{
  bool ok = true;
  std::optional<std::vector<bool>> witness; // first failing input
  std::string detail;
};

/*! Checks w(0 x) = 0 f_C(x) x for every input x, by streaming. */
inline simulation_check verify_simulation( circuit const& c, word const& w,
                                           generator_registry const& reg,
                                           int max_inputs = 20, unsigned jobs = 1 )
{
  if ( c.inputs() > max_inputs )
    throw error( "TooLarge", "verification over 2^" + std::to_string( c.inputs() ) + " inputs" );
  if ( reg.sig().n != 1 )
    throw error( "WrongDimension", "simulation words live in V" );

  auto to_digits = []( std::vector<bool> const& bits ) {
    std::string s;
    for ( bool b : bits )
      s.push_back( b ? '1' : '0' );
    return s;
  };
  std::uint64_t const total = 1ull << c.inputs();
  auto fails = [&]( std::uint64_t v ) {
    auto x = c.input_bits( v );
    ntuple in( reg.sig(), { "0" + to_digits( x ) } );
    auto got = streaming_eval( w, reg, in );
    ntuple want( reg.sig(), { "0" + to_digits( c.evaluate( x ) ) + to_digits( x ) } );
    return !( got && *got == want );
  };
  auto bad = parallel_find_first( total, jobs, fails );
  if ( !bad )
    return {};
  simulation_check r;
  r.ok = false;
  r.witness = c.input_bits( *bad );
  auto got = streaming_eval( w, reg, ntuple( reg.sig(), { "0" + to_digits( *r.witness ) } ) );
  r.detail = "input 0" + to_digits( *r.witness ) + " maps to " + ( got ? to_string( *got ) : std::string( "undefined" ) );
  return r;
}

} // namespace nv
