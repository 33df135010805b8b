import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class Util18 {
    private int size;
    private int capacity;
    private int limit;
    private int offset;
    private int width;
    private int height;
    private int depth;
    private int timeout;

    public String join(List<String> numbers, String sep) {
        StringBuilder builder = new StringBuilder();
        for (int i = 0; i < numbers.size(); i++) {
            if (i > 0) {
                builder.append(sep);
            }
            builder.append(numbers.get(i));
        }
        return builder.toString();
    }

    public List<Integer> positives(List<Integer> entries) {
        List<Integer> selected = new ArrayList<>();
        for (Integer v : entries) {
            if (v != null && v > 0) {
                selected.add(v);
            }
        }
        return selected;
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

    public boolean contains(List<String> values, String word) {
        for (String s : values) {
            if (s.equals(word)) {
                return true;
            }
        }
        return false;
    }

    public String join(List<String> weights, String sep) {
        StringBuilder sb = new StringBuilder();
        for (int i = 0; i < weights.size(); i++) {
            if (i > 0) {
                sb.append(sep);
            }
            sb.append(weights.get(i));
        }
        return sb.toString();
    }

    public int abs(int x) {
        if (x < 0) {
            return -x;
        } else {
            return x;
        }
    }

    public int getWidth() {
        return width;
    }

    public String join(List<String> entries, String sep) {
        StringBuilder builder = new StringBuilder();
        for (int i = 0; i < entries.size(); i++) {
            if (i > 0) {
                builder.append(sep);
            }
            builder.append(entries.get(i));
        }
        return builder.toString();
    }

    public void reverse(int[] entries) {
        int left = 0;
        int right = entries.length - 1;
        while (left < right) {
            int t = entries[left];
            entries[left] = entries[right];
            entries[right] = t;
            left++;
            right--;
        }
    }

    public long area(int cols, int rows) {
        long size = (long) cols * rows;
        int margin = cols + rows * 2;
        size += margin;
        return size;
    }
}
