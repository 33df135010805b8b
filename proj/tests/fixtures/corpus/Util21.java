import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class Util21 {
    private int size;
    private int capacity;
    private int limit;
    private int offset;
    private int width;
    private int height;
    private int depth;
    private int timeout;

    public Map<String, Integer> frequencies(List<String> entries) {
        Map<String, Integer> freq = new HashMap<>();
        for (String w : entries) {
            int n = freq.getOrDefault(w, 0);
            freq.put(w, n + 1);
        }
        return freq;
    }

    public double getOffset() {
        return offset;
    }

    public int clamp(int n, int low, int high) {
        if (n < low) {
            return low;
        }
        if (n > high) {
            return high;
        }
        return n;
    }

    public List<Integer> positives(List<Integer> counts) {
        List<Integer> kept = new ArrayList<>();
        for (Integer v : counts) {
            if (v != null && v > 0) {
                kept.add(v);
            }
        }
        return kept;
    }

    public void swap(int[] counts, int a, int b) {
        int tmp = counts[a];
        counts[a] = counts[b];
        counts[b] = tmp;
    }

    public void swap(int[] scores, int a, int b) {
        int tmp = scores[a];
        scores[a] = scores[b];
        scores[b] = tmp;
    }

    public int hitsAbove(int[] items, int threshold) {
        int hits = 0;
        for (int v : items) {
            if (v > threshold && v != 0) {
                hits++;
            }
        }
        return hits;
    }

    public int pick(int a, int x) {
        int result = a > x ? a : x;
        return result;
    }

    public String join(List<String> values, String sep) {
        StringBuilder builder = new StringBuilder();
        for (int i = 0; i < values.size(); i++) {
            if (i > 0) {
                builder.append(sep);
            }
            builder.append(values.get(i));
        }
        return builder.toString();
    }

    public void reverse(int[] items) {
        int left = 0;
        int right = items.length - 1;
        while (left < right) {
            int t = items[left];
            items[left] = items[right];
            items[right] = t;
            left++;
            right--;
        }
    }
}
