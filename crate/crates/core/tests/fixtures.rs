//! Fixture tests for the documented behavior of every operation, checked
//! against hand-simulated layouts and small independent oracles.

use chunk_list::{recommended_chunk_size, ChunkList, ChunkListError, DEFAULT_CHUNK_SIZE};

fn filled(chunk_size: usize, values: impl IntoIterator<Item = i64>) -> ChunkList<i64> {
    let mut list = ChunkList::with_chunk_size(chunk_size).unwrap();
    for v in values {
        list.add(v);
    }
    list
}

fn layout(list: &ChunkList<i64>) -> Vec<Vec<i64>> {
    list.chunks().map(|c| c.as_slice().to_vec()).collect()
}

/// Largest k with k * k <= n, by binary search. Independent of the
/// implementation's integer square root.
fn isqrt_oracle(n: usize) -> usize {
    let mut lo = 0usize;
    let mut hi = n.min(u32::MAX as usize) + 1;
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        match mid.checked_mul(mid) {
            Some(sq) if sq <= n => lo = mid,
            _ => hi = mid,
        }
    }
    lo
}

#[test]
fn default_chunk_size_is_1000() {
    let list: ChunkList<i64> = ChunkList::new();
    assert_eq!(list.chunk_size(), 1000);
    assert_eq!(DEFAULT_CHUNK_SIZE, 1000);
    assert_eq!(list.size(), 0);
}

#[test]
fn fifty_elements_at_chunk_size_ten() {
    let list = filled(10, 1..=50);
    assert_eq!(list.chunk_count(), 5);
    assert!(list.chunks().all(|c| c.len() == 10));
    assert_eq!(list.size(), 50);
}

#[test]
fn chunk_size_one_gives_one_chunk_per_element() {
    let list = filled(1, [10, 20, 30]);
    assert_eq!(layout(&list), vec![vec![10], vec![20], vec![30]]);
}

#[test]
fn recommended_chunk_size_matches_isqrt_oracle() {
    assert_eq!(recommended_chunk_size(1_000_000), 1000);
    assert_eq!(recommended_chunk_size(0), 1);
    assert_eq!(recommended_chunk_size(50), 7);
    for n in (0..2000).chain([9999, 10_000, 10_001, 123_456, 1 << 32]) {
        let expected = isqrt_oracle(n).max(1);
        assert_eq!(recommended_chunk_size(n), expected, "n = {n}");
    }
}

#[test]
fn eleven_elements_at_chunk_size_five_layout() {
    let list = filled(5, 0..=10);
    assert_eq!(
        layout(&list),
        vec![vec![0, 1, 2, 3, 4], vec![5, 6, 7, 8, 9], vec![10]]
    );
    assert_eq!(list.get(8).unwrap(), &8);
}

#[test]
fn get_first_element_of_single_chunk() {
    let list = filled(5, [42]);
    assert_eq!(list.get(0).unwrap(), &42);
}

#[test]
fn add_lands_in_first_open_chunk() {
    // Oracle: scan for the first chunk below capacity and expect the new
    // element appended exactly there.
    let mut list = filled(3, 0..9);
    list.remove_at(4).unwrap();

    let before = layout(&list);
    let open = before
        .iter()
        .position(|c| c.len() < list.chunk_size())
        .unwrap();
    let mut expected = before.clone();
    expected[open].push(77);

    list.add(77);
    assert_eq!(layout(&list), expected);
}

#[test]
fn set_then_get_round_trips() {
    let mut list = filled(5, 0..=10);
    list.set(8, 99).unwrap();
    assert_eq!(list.get(8).unwrap(), &99);

    let mut single = filled(5, [1]);
    single.set(0, 2).unwrap();
    assert_eq!(single.get(0).unwrap(), &2);
}

#[test]
fn set_out_of_range_is_rejected_without_mutation() {
    let mut list = filled(5, 0..3);
    let before = layout(&list);
    assert_eq!(
        list.set(3, 9).unwrap_err(),
        ChunkListError::IndexOutOfRange { index: 3, size: 3 }
    );
    assert_eq!(layout(&list), before);
}

#[test]
fn remove_at_single_element_list() {
    let mut list = filled(5, [7]);
    assert_eq!(list.remove_at(0).unwrap(), 7);
    assert_eq!(list.size(), 0);
}

#[test]
fn remove_at_out_of_range() {
    let mut list = filled(5, 0..4);
    assert_eq!(
        list.remove_at(4).unwrap_err(),
        ChunkListError::IndexOutOfRange { index: 4, size: 4 }
    );
}

#[test]
fn remove_deletes_one_occurrence() {
    let mut list = filled(2, [1, 2, 3]);
    assert!(list.remove(&2));
    let mut remaining = list.get_list();
    remaining.sort_unstable();
    assert_eq!(remaining, vec![1, 3]);
    assert!(!list.remove(&2));
}

#[test]
fn remove_duplicates_across_chunks_exactly_once() {
    let mut list = filled(2, [5, 1, 5, 2, 5, 3]);
    let count_before = list.get_list().iter().filter(|&&v| v == 5).count();
    assert_eq!(count_before, 3);
    assert!(list.remove(&5));
    let count_after = list.get_list().iter().filter(|&&v| v == 5).count();
    assert_eq!(count_after, 2);
    assert_eq!(list.size(), 5);
}

#[test]
fn remove_all_filters_every_chunk() {
    let mut list = filled(2, [9, 1, 9, 2, 9]);
    list.remove_all(&9);
    let mut remaining = list.get_list();
    remaining.sort_unstable();
    assert_eq!(remaining, vec![1, 2]);
}

#[test]
fn remove_all_of_absent_value_is_noop() {
    let mut list = filled(3, 0..7);
    let before = layout(&list);
    list.remove_all(&100);
    assert_eq!(layout(&list), before);
}

#[test]
fn contains_figure_population() {
    let list = filled(10, 1..=50);
    assert!(list.contains(&37));
    assert!(!list.contains(&51));
}

#[test]
fn contains_agrees_with_flat_scan() {
    // Oracle: a sequential scan of the flattened contents.
    let mut list = filled(4, (0..200).map(|i| (i * 37) % 50));
    list.remove_all(&13);
    let flat = list.get_list();
    for probe in -5..60 {
        assert_eq!(
            list.contains(&probe),
            flat.contains(&probe),
            "probe {probe}"
        );
    }
}

#[test]
fn size_tracks_adds_and_removals() {
    let mut list = filled(10, 0..30);
    let mut expected = 30usize;
    for v in [3, 100, 7, 7, 200] {
        if list.remove(&v) {
            expected -= 1;
        }
        assert_eq!(list.size(), expected);
    }
    for v in 0..5 {
        list.add(v);
        expected += 1;
    }
    assert_eq!(list.size(), expected);
}

#[test]
fn get_list_flattens_in_chunk_order() {
    let list = filled(5, 0..=10);
    assert_eq!(list.get_list(), (0..=10).collect::<Vec<_>>());

    let empty: ChunkList<i64> = ChunkList::new();
    assert!(empty.get_list().is_empty());
}

#[test]
fn set_chunk_size_same_value_preserves_contents() {
    let mut list = filled(10, 0..37);
    let before = list.get_list();
    list.set_chunk_size(10).unwrap();
    assert_eq!(list.get_list(), before);
    assert_eq!(list.chunk_size(), 10);
}

#[test]
fn shrink_matches_flatten_clear_readd_oracle() {
    // Oracle: rebuild by hand with the add rule at the new size.
    let mut list = filled(10, 0..50);
    list.remove_at(13).unwrap();
    list.remove_at(40).unwrap();
    let flattened = list.get_list();

    let mut expected = ChunkList::with_chunk_size(7).unwrap();
    for v in &flattened {
        expected.add(*v);
    }

    list.set_chunk_size(7).unwrap();
    assert_eq!(layout(&list), layout(&expected));
}

#[test]
fn sort_handles_presorted_input() {
    let mut list = filled(4, 0..13);
    let before = list.get_list();
    list.sort();
    assert_eq!(list.get_list(), before);
}

#[test]
fn sort_matches_sequential_sort_oracle() {
    let mut values = Vec::new();
    let mut state = 0x2545F4914F6CDD1Du64;
    for _ in 0..10_000 {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        values.push((state % 1000) as i64);
    }

    let mut expected = values.clone();
    expected.sort();

    let mut list = filled(97, values);
    list.sort();
    assert_eq!(list.get_list(), expected);

    // Canonical fill: all chunks full except possibly the last.
    let lens: Vec<usize> = list.chunks().map(|c| c.len()).collect();
    for (i, len) in lens.iter().enumerate() {
        if i + 1 < lens.len() {
            assert_eq!(*len, 97);
        } else {
            assert!(*len >= 1 && *len <= 97);
        }
    }
}

#[test]
fn clear_then_size_is_zero() {
    let mut list = filled(10, 0..100);
    list.clear();
    assert_eq!(list.size(), 0);
    assert!(list.is_empty());
}

#[test]
fn reflow_equals_repeated_add() {
    // A same-size resize takes the rebalance path; the result must be
    // indistinguishable from re-adding the flattened items one by one.
    let mut list = filled(6, 0..40);
    list.remove_all(&7);
    list.remove_at(11).unwrap();
    let flattened = list.get_list();

    let mut by_adds = ChunkList::with_chunk_size(6).unwrap();
    for v in &flattened {
        by_adds.add(*v);
    }

    list.set_chunk_size(6).unwrap();
    assert_eq!(layout(&list), layout(&by_adds));
}
