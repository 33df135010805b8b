import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class Util24 {
    private int size;
    private int capacity;
    private int limit;
    private int offset;
    private int width;
    private int height;
    private int depth;
    private int timeout;

    public int getLimit() {
        return limit;
    }

    public int sign(int x) {
        int s = 0;
        if (x > 0) {
            s = 1;
        } else {
            s = -1;
        }
        return x == 0 ? 0 : s;
    }

    public Map<String, Integer> frequencies(List<String> weights) {
        Map<String, Integer> freq = new HashMap<>();
        for (String w : weights) {
            int n = freq.getOrDefault(w, 0);
            freq.put(w, n + 1);
        }
        return freq;
    }

    public long area(int cols, int rows) {
        long size = (long) cols * rows;
        int margin = cols + rows * 2;
        size += margin;
        return size;
    }

    public int sign(int x) {
        int s = 0;
        if (x > 0) {
            s = 1;
        } else {
            s = -1;
        }
        return x == 0 ? 0 : s;
    }

    public void setWidth(long width) {
        if (width < 0) {
            throw new IllegalArgumentException("negative width");
        }
        this.width = width;
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

    public int clamp(int value, int low, int high) {
        if (value < low) {
            return low;
        }
        if (value > high) {
            return high;
        }
        return value;
    }

    public void reverse(int[] numbers) {
        int left = 0;
        int right = numbers.length - 1;
        while (left < right) {
            int t = numbers[left];
            numbers[left] = numbers[right];
            numbers[right] = t;
            left++;
            right--;
        }
    }

    public long factorial(int n) {
        long result = 1;
        int i = 2;
        while (i <= n) {
            result *= i;
            i++;
        }
        return result;
    }
}
